#pragma once

#include <array>
#include <string>
#include <vector>

#include "conway/bigint.hpp"
#include "conway/rings.hpp"

namespace conway {

struct Vec2 {
    BigInt x = 0;
    BigInt y = 0;

    Vec2() = default;
    Vec2(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}
    std::string str() const;
};

bool operator==(const Vec2& a, const Vec2& b);
bool operator!=(const Vec2& a, const Vec2& b);
bool operator<(const Vec2& a, const Vec2& b);
Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a);
BigInt det(const Vec2& a, const Vec2& b);

// Integer matrix acting on column vectors.
Vec2 apply(const Mat2& m, const Vec2& v);
// Matrix with columns p, q.
Mat2 columns(const Vec2& p, const Vec2& q);

// Representative of {v, -v} with x > 0, or x = 0 and y > 0.
Vec2 lax(const Vec2& v);
bool is_primitive(const Vec2& v);

// Three vectors summing to zero; canonical representative of the lax triple.
struct Superbase {
    std::array<Vec2, 3> v;

    static Superbase standard();
    // Pair k is (v[k], v[k+1]); the remaining vector is v[k+2] (indices mod 3).
    std::array<Vec2, 2> pair(int k) const { return {v[k % 3], v[(k + 1) % 3]}; }
    const Vec2& opposite(int k) const { return v[(k + 2) % 3]; }
    bool contains(const Vec2& lax_vector) const;
    std::string str() const;
};

bool operator==(const Superbase& a, const Superbase& b);
bool operator!=(const Superbase& a, const Superbase& b);
bool operator<(const Superbase& a, const Superbase& b);

Superbase normalize_superbase(const Vec2& a, const Vec2& b, const Vec2& c);
// The superbase sharing pair k with s.
Superbase neighbor(const Superbase& s, int k);
std::array<Superbase, 3> neighbors(const Superbase& s);

// Incident (vector, basis, superbase); all components lax and sorted.
struct Flag {
    Vec2 vector;
    std::array<Vec2, 2> basis;
    Superbase superbase;

    static Flag standard();
    static Flag make(const Vec2& vector, const Vec2& other, const Superbase& s);
    bool valid() const;
    // The basis vector that is not the flag vector.
    Vec2 partner() const;
    // The superbase vector outside the basis.
    Vec2 third() const;
    std::string str() const;
};

bool operator==(const Flag& a, const Flag& b);
bool operator<(const Flag& a, const Flag& b);

Superbase act(const Mat2& m, const Superbase& s);
Flag act(const Mat2& m, const Flag& f);

// Flag adjacent across component i: 0 changes the vector, 1 the basis, 2 the superbase.
Flag adjacent(const Flag& f, int i);

struct CoxeterReport {
    std::array<Mat2, 3> generators;
    bool involutions = false;    // g_i^2 = +-1
    bool braid01 = false;        // (g0 g1)^3 = +-1
    bool commute02 = false;      // g0 g2 = +-g2 g0
    bool stabilizers = false;    // g_i moves exactly component i of the standard flag
    bool ok() const { return involutions && braid01 && commute02 && stabilizers; }
};

// Frozen generator fixtures, with the relations re-verified on each call.
CoxeterReport coxeter_generators();
// Brute force over matrices with entries in {-1,0,1}: every candidate for generator i.
std::vector<Mat2> search_generator(int i);

using Word = std::vector<int>;
// Shortlex-least reduced word for the element of W(3, infinity) spelled by w.
Word coxeter_normal_form(const Word& w);
Flag word_to_flag(const Word& w);

struct TransitivityReport {
    int radius = 0;
    std::size_t words = 0;        // all words of length <= radius
    std::size_t elements = 0;     // distinct group elements among them
    std::size_t flags = 0;        // flags within chamber distance radius
    bool injective = false;
    bool onto = false;
    bool ok() const { return injective && onto; }
};

TransitivityReport verify_simple_transitivity(int radius);
std::vector<Flag> flag_ball(int radius);

struct SuperbaseBall {
    std::vector<Superbase> nodes;                // BFS order from the standard superbase
    std::vector<int> depth;
    std::vector<std::array<int, 3>> adjacency;   // neighbor index across pair k, -1 outside the ball
};

SuperbaseBall superbase_ball(int depth);

}  // namespace conway
