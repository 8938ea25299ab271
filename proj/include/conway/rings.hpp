#pragma once

#include <array>
#include <string>
#include <vector>

#include "conway/bigint.hpp"

namespace conway {

// Z[theta] with theta one of: nothing, sqrt 2, sqrt 3, i, omega (omega^2 = -1 - omega).
enum class Ring { Z, Sqrt2, Sqrt3, Gauss, Eisenstein };

const char* ring_name(Ring r);

struct RingElement {
    Ring ring = Ring::Z;
    BigInt x = 0;
    BigInt y = 0;

    RingElement() = default;
    RingElement(Ring r, BigInt x_, BigInt y_ = 0);

    static RingElement zero(Ring r) { return {r, 0, 0}; }
    static RingElement one(Ring r) { return {r, 1, 0}; }

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const;
};

bool operator==(const RingElement& a, const RingElement& b);
bool operator!=(const RingElement& a, const RingElement& b);
// Lexicographic on (x, y); only meaningful within one ring.
bool operator<(const RingElement& a, const RingElement& b);

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator*(const BigInt& k, const RingElement& a);

RingElement conj(const RingElement& z);
BigInt norm(const RingElement& z);
BigInt trace(const RingElement& z);
bool is_unit(const RingElement& z);
// Inverse of a unit; throws not-invertible otherwise.
RingElement unit_inverse(const RingElement& u);

// Finite unit groups only (Z, Gauss, Eisenstein).
std::vector<RingElement> units(Ring r);

// Euclidean division by nearest-lattice-point rounding: a = q*b + r with |N(r)| < |N(b)|.
void divmod(const RingElement& a, const RingElement& b, RingElement& q, RingElement& r);
// Exact division; throws divisibility if b does not divide a.
RingElement exact_div(const RingElement& a, const RingElement& b);
RingElement ring_gcd(RingElement a, RingElement b);

// The ideal (x, y) is the whole ring. The zero vector is not primitive.
bool is_primitive(const RingElement& x, const RingElement& y);

using RVec = std::array<RingElement, 2>;

// Rows (a b; c d).
struct Mat2 {
    RingElement a, b, c, d;

    static Mat2 identity(Ring r);
    static Mat2 integer(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);
    Ring ring() const { return a.ring; }
    std::string str() const;
};

bool operator==(const Mat2& m, const Mat2& n);
bool operator!=(const Mat2& m, const Mat2& n);
Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 operator-(const Mat2& m);
RingElement det(const Mat2& m);
Mat2 inverse(const Mat2& m);
Mat2 transpose(const Mat2& m);
RVec apply(const Mat2& m, const RVec& v);
// m == n or m == -n
bool projectively_equal(const Mat2& m, const Mat2& n);

}  // namespace conway
