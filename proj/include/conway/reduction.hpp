#pragma once

#include <cstddef>
#include <vector>

#include "conway/bqf.hpp"

namespace conway {

enum class WellKind { Triad, Cell };
enum class Orientation { Positive, Negative, Ambiguous };
const char* well_kind_name(WellKind k);
const char* orientation_name(Orientation o);

// Source of the climbing flow of a positive-definite form. Values sorted u <= v <= w,
// with pu, pv, pw the zero-sum representatives carrying them.
struct Well {
    WellKind kind = WellKind::Triad;
    BigInt u, v, w;
    Vec2 pu, pv, pw;
    Superbase superbase;
    Orientation orientation = Orientation::Ambiguous;
    std::size_t steps = 0;
};

Well find_well(const BQF& q);
Well find_well_from(const BQF& q, const Superbase& start);
// u x^2 -+ (u + v - w) x y + v y^2, equivalent to q under SL2(Z).
BQF gauss_reduced(const BQF& q);
BQF gauss_reduced(const Well& w);

// Textbook reduction of positive-definite forms: |b| <= a <= c, b >= 0 if |b| = a or a = c.
bool is_reduced_definite(const BQF& q);
BQF reduce_definite(const BQF& q);

// Q(p) > 0 > Q(n)
struct RiverEdge {
    Vec2 p, n;
};
bool operator==(const RiverEdge& a, const RiverEdge& b);

struct RiverPeriod {
    std::vector<RiverEdge> edges;
    std::vector<BigInt> positive_bank, negative_bank;
    Mat2 automorph;  // edges[0] -> edge after the last one
};

RiverEdge find_river_edge(const BQF& q);
RiverPeriod trace_river(const BQF& q);
RiverPeriod trace_river_from(const BQF& q, const RiverEdge& start);
// The next river edge in the walking direction.
RiverEdge river_step(const BQF& q, const RiverEdge& e);
bool preserves(const BQF& q, const Mat2& t);

std::vector<BQF> riverbends(const BQF& q);
std::vector<BQF> riverbends(const BQF& q, const RiverPeriod& period);

struct PellSolution {
    BigInt x, y;
    Mat2 automorph;
    std::size_t period = 0;
};

PellSolution pell_solve(const BigInt& d);

struct MinimumReport {
    BigInt mu;
    Vec2 witness;
    BigInt delta;
    bool bound_ok = false;  // 5 mu^2 <= delta
};

MinimumReport minimum_nonzero(const BQF& q);
MinimumReport minimum_nonzero(const BQF& q, const RiverPeriod& period);

// Classical indefinite reduction: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const BQF& q);
// Gauss' neighbor operator (a, b, c) -> (c, r, (r^2 - D) / 4c).
BQF rho(const BQF& q);
// The reduced forms in the class of q, in rho order.
std::vector<BQF> reduced_cycle(const BQF& q);

}  // namespace conway
