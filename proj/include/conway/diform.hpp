#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conway/bigint.hpp"
#include "conway/bqf.hpp"
#include "conway/rings.hpp"

namespace conway {

enum class Color { Red, Blue };
const char* color_name(Color c);

Ring sigma_ring(int sigma);

// red (u, v sqrt s), blue (u sqrt s, v)
struct Divector {
    Color color = Color::Red;
    BigInt u = 0, v = 0;

    Divector() = default;
    Divector(Color c, BigInt u_, BigInt v_) : color(c), u(std::move(u_)), v(std::move(v_)) {}
    static Divector red(BigInt u, BigInt v) { return {Color::Red, std::move(u), std::move(v)}; }
    static Divector blue(BigInt u, BigInt v) { return {Color::Blue, std::move(u), std::move(v)}; }
    std::string str() const;
};

bool operator==(const Divector& a, const Divector& b);
bool operator!=(const Divector& a, const Divector& b);
bool operator<(const Divector& a, const Divector& b);
Divector operator+(const Divector& a, const Divector& b);  // same color required
Divector operator-(const Divector& a, const Divector& b);
Divector operator-(const Divector& a);
Divector operator*(const BigInt& k, const Divector& a);
// Multiplication by sqrt(sigma) swaps colors.
Divector times_root(int sigma, const Divector& d);
Divector lax(const Divector& d);
bool is_primitive(int sigma, const Divector& d);
// As a column vector over Z[sqrt sigma].
RVec as_ring_vector(int sigma, const Divector& d);

struct Dibasis {
    Divector r, b;  // red, blue
};

// Determinant of the matrix with rows r, b; a rational integer.
BigInt dibasis_det(int sigma, const Dibasis& d);
bool is_dibasis(int sigma, const Dibasis& d);
// Accepts the two divectors in either order.
Dibasis make_dibasis(int sigma, const Divector& x, const Divector& y);

struct Pinwheel {
    int sigma = 2;
    std::vector<Divector> faces;  // 2 sigma faces, x_{k+1} = sqrt(s) x_k - x_{k-1}
    // faces[k], faces[k+1] with faces[2 sigma] = -faces[0]
    std::pair<Divector, Divector> edge(std::size_t k) const;
    // Sorted lax faces: equal for equal pinwheels.
    std::vector<Divector> key() const;
};

Pinwheel pinwheel_from(int sigma, const Divector& x0, const Divector& x1);
Pinwheel pinwheel_complete(int sigma, const Dibasis& d);
// The pinwheel across edge k.
Pinwheel pinwheel_neighbor(const Pinwheel& p, std::size_t k);

struct PinwheelBall {
    std::vector<Pinwheel> nodes;
    std::vector<int> depth;
    std::vector<std::vector<int>> adjacency;  // per edge index, -1 outside the ball
};

PinwheelBall pinwheel_ball(int sigma, int depth);

// Q(x, y) = a x^2 + b sqrt(s) x y + c y^2
struct BQD {
    int sigma = 2;
    BigInt a = 0, b = 0, c = 0;

    BQD() = default;
    BQD(int s, BigInt a_, BigInt b_, BigInt c_);
    std::string str() const;
};

BigInt discriminant(const BQD& q);
bool is_primitive(const BQD& q);
FormClass classify(const BQD& q);
BigInt evaluate(const BQD& q, const Divector& d);
// Q(u, v sqrt s) = a u^2 + b s u v + c s v^2
BQF q_red(const BQD& q);
// Q(u sqrt s, v) = a s u^2 + b s u v + c v^2
BQF q_blue(const BQD& q);

struct DiCellValues {
    BigInt u, v;           // Q(r), Q(b)
    BigInt e, f;           // Q(sqrt(s) r -+ b)
    BigInt e2, f2;         // Q(r -+ sqrt(s) b)
    std::optional<BigInt> m, n, m2, n2;  // sigma = 3: Q(2r -+ sqrt3 b), Q(sqrt3 r -+ 2b)
    BigInt delta;          // f - (s u + v)
};

DiCellValues dicell_values(const BQD& q, const Dibasis& d);
// The diform in the coordinates of a dibasis: (Q(r), delta / s, Q(b)).
BQD dibasis_form(const BQD& q, const Dibasis& d);

struct DiWell {
    Pinwheel source;
    std::vector<BigInt> values;
    std::vector<std::size_t> flat_edges;  // circled edges at the source
    std::size_t steps = 0;
    BQF red_reduced, blue_reduced;
    // Lax faces of the source pinwheel and of pinwheels joined to it by flat edges.
    std::vector<Divector> source_key;
};

DiWell diform_well(const BQD& q);
DiWell diform_well_from(const BQD& q, const Dibasis& start);

struct DiRiverStep {
    Divector y0, y1;  // river edge; pinwheel P(y0, y1) is the next vertex
    bool bend = false;
};

struct DiRiver {
    std::vector<DiRiverStep> steps;
    Mat2 automorph;  // over Z[sqrt s]
    std::size_t bends = 0;
    bool exceptional = false;
    BigInt mu;
    Divector witness;
    BigInt delta;
    bool bound_ok = false;  // 10 mu^2 <= D (s = 2), 25 mu^2 <= 2 D (s = 3); reported for exceptional rivers too
};

std::pair<Divector, Divector> diform_river_edge(const BQD& q);
DiRiver diform_river(const BQD& q);
// Bend test at an edge: some flanking pair of the cell has opposite signs.
bool is_bend(const BQD& q, const Divector& x, const Divector& y);

struct Gamma0Report {
    int sigma = 2;
    std::size_t forward_checked = 0, forward_ok = 0;
    std::size_t converse_checked = 0, converse_ok = 0;
    // Elements of the form [[a sqrt s, b], [c, d sqrt s]]: integral conjugates found (expected none).
    std::size_t nonplus_checked = 0, nonplus_integral = 0;
    bool ok() const {
        return forward_ok == forward_checked && converse_ok == converse_checked && nonplus_integral == 0;
    }
};

// Conjugation by g = diag(1, sqrt s); nullopt when the result has irrational entries.
std::optional<Mat2> conjugate_to_gamma0(int sigma, const Mat2& m);
Gamma0Report verify_gamma0_conjugation(int sigma);

}  // namespace conway
