#pragma once

#include <string>

#include "conway/bigint.hpp"
#include "conway/topograph.hpp"

namespace conway {

// Q(x, y) = a x^2 + b x y + c y^2
struct BQF {
    BigInt a = 0, b = 0, c = 0;

    BQF() = default;
    BQF(BigInt a_, BigInt b_, BigInt c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
    std::string str() const;
};

bool operator==(const BQF& p, const BQF& q);
bool operator!=(const BQF& p, const BQF& q);
bool operator<(const BQF& p, const BQF& q);

enum class FormClass { PositiveDefinite, NegativeDefinite, IndefiniteNondegenerate, Degenerate };
const char* form_class_name(FormClass k);

BigInt discriminant(const BQF& q);
bool is_primitive(const BQF& q);
FormClass classify(const BQF& q);
BigInt evaluate(const BQF& q, const Vec2& v);
// The form v -> Q(M v).
BQF transform(const BQF& q, const Mat2& m);

// Values around the edge {p, q}: u = Q(p), v = Q(q), e = Q(p - q), f = Q(p + q).
// Inside a zero-sum superbase the third vector is -(p + q), so w = f.
struct CellValues {
    BigInt u, v, w, e, f;
    Vec2 p, q;
};

CellValues cell_values(const BQF& q, const Vec2& p, const Vec2& r);
CellValues cell_values(const BQF& q, const Superbase& s, int edge);

enum class Arrow { TowardF, TowardE, Flat };
const char* arrow_name(Arrow a);

Arrow arrow(const CellValues& cv);
Arrow arrow(const BQF& q, const Superbase& s, int edge);

}  // namespace conway
