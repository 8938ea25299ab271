#include "conway/rings.hpp"

#include "conway/error.hpp"

namespace conway {

namespace {

void same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring)
        fail(ErrorKind::TagMismatch,
             std::string("ring mismatch: ") + ring_name(a.ring) + " vs " + ring_name(b.ring));
}

// theta^2 = d for the sqrt-type rings (Gauss is d = -1).
long sqrt_param(Ring r) {
    switch (r) {
        case Ring::Sqrt2: return 2;
        case Ring::Sqrt3: return 3;
        case Ring::Gauss: return -1;
        default: return 0;
    }
}

}  // namespace

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Z: return "Z";
        case Ring::Sqrt2: return "Z_sqrt2";
        case Ring::Sqrt3: return "Z_sqrt3";
        case Ring::Gauss: return "Gauss";
        case Ring::Eisenstein: return "Eisenstein";
    }
    return "?";
}

RingElement::RingElement(Ring r, BigInt x_, BigInt y_) : ring(r), x(std::move(x_)), y(std::move(y_)) {
    if (r == Ring::Z && y != 0) fail(ErrorKind::TagMismatch, "integer with nonzero theta coordinate");
}

std::string RingElement::str() const {
    if (ring == Ring::Z) return to_string(x);
    const char* t = ring == Ring::Sqrt2 ? "r2" : ring == Ring::Sqrt3 ? "r3" : ring == Ring::Gauss ? "i" : "w";
    std::string s = to_string(x);
    if (y >= 0) s += "+";
    return s + to_string(y) + t;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring == b.ring && a.x == b.x && a.y == b.y;
}
bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
bool operator<(const RingElement& a, const RingElement& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring, a.x + b.x, a.y + b.y};
}
RingElement operator-(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring, a.x - b.x, a.y - b.y};
}
RingElement operator-(const RingElement& a) { return {a.ring, -a.x, -a.y}; }

RingElement operator*(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    if (a.ring == Ring::Eisenstein) {
        BigInt bd = a.y * b.y;
        return {a.ring, a.x * b.x - bd, a.x * b.y + a.y * b.x - bd};
    }
    BigInt x = a.x * b.x + sqrt_param(a.ring) * (a.y * b.y);
    BigInt y = a.x * b.y + a.y * b.x;
    return {a.ring, x, y};
}

RingElement operator*(const BigInt& k, const RingElement& a) { return {a.ring, k * a.x, k * a.y}; }

RingElement conj(const RingElement& z) {
    if (z.ring == Ring::Eisenstein) return {z.ring, z.x - z.y, -z.y};
    return {z.ring, z.x, -z.y};
}

BigInt norm(const RingElement& z) {
    if (z.ring == Ring::Eisenstein) return z.x * z.x - z.x * z.y + z.y * z.y;
    return z.x * z.x - sqrt_param(z.ring) * (z.y * z.y);
}

BigInt trace(const RingElement& z) {
    if (z.ring == Ring::Eisenstein) return 2 * z.x - z.y;
    return 2 * z.x;
}

bool is_unit(const RingElement& z) {
    BigInt n = norm(z);
    return n == 1 || n == -1;
}

RingElement unit_inverse(const RingElement& u) {
    BigInt n = norm(u);
    if (n != 1 && n != -1) fail(ErrorKind::NotInvertible, "not a unit: " + u.str());
    return n * conj(u);
}

std::vector<RingElement> units(Ring r) {
    switch (r) {
        case Ring::Z: return {{r, 1}, {r, -1}};
        case Ring::Gauss: return {{r, 1, 0}, {r, -1, 0}, {r, 0, 1}, {r, 0, -1}};
        case Ring::Eisenstein:
            return {{r, 1, 0}, {r, -1, 0}, {r, 0, 1}, {r, 0, -1}, {r, -1, -1}, {r, 1, 1}};
        default:
            fail(ErrorKind::UnsupportedRing, std::string(ring_name(r)) + " has an infinite unit group");
    }
}

void divmod(const RingElement& a, const RingElement& b, RingElement& q, RingElement& r) {
    same_ring(a, b);
    if (b.is_zero()) fail(ErrorKind::NotInvertible, "division by zero");
    RingElement num = a * conj(b);
    BigInt n = norm(b);
    q = RingElement(a.ring, round_div(num.x, n), round_div(num.y, n));
    r = a - q * b;
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
    RingElement q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) fail(ErrorKind::Divisibility, b.str() + " does not divide " + a.str());
    return q;
}

RingElement ring_gcd(RingElement a, RingElement b) {
    same_ring(a, b);
    while (!b.is_zero()) {
        RingElement q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_primitive(const RingElement& x, const RingElement& y) {
    if (x.is_zero() && y.is_zero()) return false;
    return is_unit(ring_gcd(x, y));
}

Mat2 Mat2::identity(Ring r) {
    return {RingElement::one(r), RingElement::zero(r), RingElement::zero(r), RingElement::one(r)};
}

Mat2 Mat2::integer(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return {{Ring::Z, a}, {Ring::Z, b}, {Ring::Z, c}, {Ring::Z, d}};
}

std::string Mat2::str() const { return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]"; }

bool operator==(const Mat2& m, const Mat2& n) { return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d; }
bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

RingElement det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 inverse(const Mat2& m) {
    RingElement di = unit_inverse(det(m));
    return {di * m.d, di * -m.b, di * -m.c, di * m.a};
}

Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

RVec apply(const Mat2& m, const RVec& v) { return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]}; }

bool projectively_equal(const Mat2& m, const Mat2& n) { return m == n || m == -n; }

}  // namespace conway
