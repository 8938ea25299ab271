#include "conway/bqf.hpp"

namespace conway {

std::string BQF::str() const { return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")"; }

bool operator==(const BQF& p, const BQF& q) { return p.a == q.a && p.b == q.b && p.c == q.c; }
bool operator!=(const BQF& p, const BQF& q) { return !(p == q); }
bool operator<(const BQF& p, const BQF& q) {
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    return p.c < q.c;
}

const char* form_class_name(FormClass k) {
    switch (k) {
        case FormClass::PositiveDefinite: return "positive-definite";
        case FormClass::NegativeDefinite: return "negative-definite";
        case FormClass::IndefiniteNondegenerate: return "indefinite-nondegenerate";
        case FormClass::Degenerate: return "degenerate";
    }
    return "?";
}

BigInt discriminant(const BQF& q) { return q.b * q.b - 4 * q.a * q.c; }

bool is_primitive(const BQF& q) { return gcd(gcd(q.a, q.b), q.c) == 1; }

FormClass classify(const BQF& q) {
    BigInt d = discriminant(q);
    if (d < 0) return q.a > 0 ? FormClass::PositiveDefinite : FormClass::NegativeDefinite;
    if (is_square(d)) return FormClass::Degenerate;
    return FormClass::IndefiniteNondegenerate;
}

BigInt evaluate(const BQF& q, const Vec2& v) { return q.a * v.x * v.x + q.b * v.x * v.y + q.c * v.y * v.y; }

BQF transform(const BQF& q, const Mat2& m) {
    Vec2 c1 = apply(m, Vec2(1, 0)), c2 = apply(m, Vec2(0, 1));
    BigInt a = evaluate(q, c1), c = evaluate(q, c2);
    BigInt b = evaluate(q, c1 + c2) - a - c;
    return {a, b, c};
}

CellValues cell_values(const BQF& q, const Vec2& p, const Vec2& r) {
    CellValues cv;
    cv.p = p;
    cv.q = r;
    cv.u = evaluate(q, p);
    cv.v = evaluate(q, r);
    cv.e = evaluate(q, p - r);
    cv.f = evaluate(q, p + r);
    cv.w = cv.f;
    return cv;
}

CellValues cell_values(const BQF& q, const Superbase& s, int edge) {
    auto pr = s.pair(edge);
    CellValues cv = cell_values(q, pr[0], pr[1]);
    cv.w = evaluate(q, s.opposite(edge));
    return cv;
}

const char* arrow_name(Arrow a) {
    switch (a) {
        case Arrow::TowardF: return "toward-f";
        case Arrow::TowardE: return "toward-e";
        case Arrow::Flat: return "flat";
    }
    return "?";
}

Arrow arrow(const CellValues& cv) {
    if (cv.f > cv.e) return Arrow::TowardF;
    if (cv.f < cv.e) return Arrow::TowardE;
    return Arrow::Flat;
}

Arrow arrow(const BQF& q, const Superbase& s, int edge) { return arrow(cell_values(q, s, edge)); }

}  // namespace conway
