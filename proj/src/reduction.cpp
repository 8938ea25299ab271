#include "conway/reduction.hpp"

#include <algorithm>

#include "conway/error.hpp"

namespace conway {

namespace {

constexpr std::size_t kMaxSteps = 10'000'000;

void require_positive_definite(const BQF& q) {
    if (classify(q) != FormClass::PositiveDefinite)
        fail(ErrorKind::Classification, q.str() + " is not positive-definite");
}

void require_indefinite(const BQF& q) {
    FormClass k = classify(q);
    if (k == FormClass::Degenerate)
        fail(ErrorKind::SquareOrInvalidDiscriminant,
             q.str() + " has square discriminant " + to_string(discriminant(q)));
    if (k != FormClass::IndefiniteNondegenerate)
        fail(ErrorKind::Classification, q.str() + " is not indefinite");
}

// x < sqrt(d) for nonsquare d > 0
bool lt_sqrt(const BigInt& x, const BigInt& d) { return x < 0 || x * x < d; }

}  // namespace

const char* well_kind_name(WellKind k) { return k == WellKind::Triad ? "triad" : "cell"; }

const char* orientation_name(Orientation o) {
    switch (o) {
        case Orientation::Positive: return "positive";
        case Orientation::Negative: return "negative";
        case Orientation::Ambiguous: return "ambiguous";
    }
    return "?";
}

Well find_well_from(const BQF& q, const Superbase& start) {
    require_positive_definite(q);
    Well well;
    Superbase s = start;
    for (;;) {
        int best = -1;
        BigInt drop = 0;
        for (int k = 0; k < 3; ++k) {
            CellValues cv = cell_values(q, s, k);
            BigInt d = cv.w - cv.e;
            if (d > drop) {
                drop = d;
                best = k;
            }
        }
        if (best < 0) break;
        s = neighbor(s, best);
        if (++well.steps > kMaxSteps) fail(ErrorKind::Budget, "well descent did not terminate");
    }
    std::array<std::pair<BigInt, Vec2>, 3> vals;
    for (int i = 0; i < 3; ++i) vals[i] = {evaluate(q, s.v[i]), s.v[i]};
    std::sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return lax(x.second) < lax(y.second);
    });
    well.superbase = s;
    well.u = vals[0].first;
    well.v = vals[1].first;
    well.w = vals[2].first;
    well.pu = vals[0].second;
    well.pv = vals[1].second;
    well.pw = vals[2].second;
    well.kind = well.u + well.v == well.w ? WellKind::Cell : WellKind::Triad;
    if (well.u == well.v || well.v == well.w)
        well.orientation = Orientation::Ambiguous;
    else
        well.orientation = det(well.pu, well.pv) == 1 ? Orientation::Positive : Orientation::Negative;
    return well;
}

Well find_well(const BQF& q) { return find_well_from(q, Superbase::standard()); }

BQF gauss_reduced(const Well& w) {
    BigInt mid = w.u + w.v - w.w;
    if (w.orientation == Orientation::Positive) mid = -mid;
    return {w.u, mid, w.v};
}

BQF gauss_reduced(const BQF& q) { return gauss_reduced(find_well(q)); }

bool is_reduced_definite(const BQF& q) {
    if (q.a <= 0) return false;
    BigInt ab = abs(q.b);
    if (!(ab <= q.a && q.a <= q.c)) return false;
    if ((ab == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
}

BQF reduce_definite(const BQF& q) {
    require_positive_definite(q);
    BQF f = q;
    for (std::size_t it = 0;; ++it) {
        if (it > kMaxSteps) fail(ErrorKind::Budget, "definite reduction did not terminate");
        // x -> x + k y brings b into (-a, a]
        BigInt k = floor_div(f.a - f.b, 2 * f.a);
        f = BQF(f.a, f.b + 2 * f.a * k, f.a * k * k + f.b * k + f.c);
        if (f.a > f.c) {
            f = BQF(f.c, -f.b, f.a);
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

bool operator==(const RiverEdge& a, const RiverEdge& b) { return a.p == b.p && a.n == b.n; }

RiverEdge find_river_edge(const BQF& q) {
    require_indefinite(q);
    Superbase s = Superbase::standard();
    for (std::size_t it = 0; it < kMaxSteps; ++it) {
        std::array<BigInt, 3> vals{evaluate(q, s.v[0]), evaluate(q, s.v[1]), evaluate(q, s.v[2])};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (vals[i] > 0 && vals[j] < 0) return {s.v[i], s.v[j]};
        // All values share one sign; walk against the flow of |Q|.
        int sg = sign(vals[0]);
        int best = -1;
        BigInt drop = 0;
        for (int k = 0; k < 3; ++k) {
            CellValues cv = cell_values(q, s, k);
            BigInt d = sg * (cv.w - cv.e);
            if (d > drop) {
                drop = d;
                best = k;
            }
        }
        if (best < 0) fail(ErrorKind::InvariantViolation, "indefinite form has a well at " + s.str());
        s = neighbor(s, best);
    }
    fail(ErrorKind::Budget, "river search did not terminate");
}

RiverEdge river_step(const BQF& q, const RiverEdge& e) {
    Vec2 t = e.p + e.n;
    if (evaluate(q, t) > 0) return {t, e.n};
    return {e.p, t};
}

bool preserves(const BQF& q, const Mat2& t) { return transform(q, t) == q; }

RiverPeriod trace_river_from(const BQF& q, const RiverEdge& start) {
    require_indefinite(q);
    if (!(evaluate(q, start.p) > 0 && evaluate(q, start.n) < 0) || abs(det(start.p, start.n)) != 1)
        fail(ErrorKind::Precondition, "start is not a river edge");
    RiverPeriod out;
    Mat2 m0inv = inverse(columns(start.p, start.n));
    RiverEdge cur = start;
    for (std::size_t k = 0; k < kMaxSteps; ++k) {
        out.edges.push_back(cur);
        out.positive_bank.push_back(evaluate(q, cur.p));
        out.negative_bank.push_back(evaluate(q, cur.n));
        cur = river_step(q, cur);
        Mat2 t = columns(cur.p, cur.n) * m0inv;
        if (preserves(q, t)) {
            out.automorph = t;
            return out;
        }
    }
    fail(ErrorKind::Budget, "river period exceeds the step budget");
}

RiverPeriod trace_river(const BQF& q) { return trace_river_from(q, find_river_edge(q)); }

std::vector<BQF> riverbends(const BQF& q, const RiverPeriod& period) {
    std::vector<BQF> out;
    for (const auto& e : period.edges) {
        CellValues cv = cell_values(q, e.p, e.n);
        if ((cv.f > 0) == (cv.e > 0)) continue;
        BigInt mid = cv.f - cv.u - cv.v;
        bool pos = det(e.p, e.n) == 1;
        if (pos == (mid > 0))
            out.emplace_back(cv.u, abs(mid), cv.v);
        else
            out.emplace_back(cv.v, abs(mid), cv.u);
    }
    return out;
}

std::vector<BQF> riverbends(const BQF& q) { return riverbends(q, trace_river(q)); }

PellSolution pell_solve(const BigInt& d) {
    if (d < 2 || is_square(d))
        fail(ErrorKind::SquareOrInvalidDiscriminant, "D must be a nonsquare integer >= 2, got " + to_string(d));
    BQF q(1, 0, -d);
    RiverPeriod per = trace_river_from(q, {{1, 0}, {0, 1}});
    PellSolution sol;
    sol.automorph = per.automorph;
    sol.period = per.edges.size();
    std::vector<Vec2> cands;
    for (std::size_t k = 1; k < per.edges.size(); ++k) cands.push_back(per.edges[k].p);
    cands.push_back(apply(per.automorph, Vec2(1, 0)));
    bool found = false;
    for (const auto& v : cands) {
        if (v.y == 0 || evaluate(q, v) != 1) continue;
        BigInt x = abs(v.x), y = abs(v.y);
        if (!found || x < sol.x) {
            sol.x = x;
            sol.y = y;
            found = true;
        }
    }
    if (!found) fail(ErrorKind::InvariantViolation, "no unit-value vector on the positive bank");
    return sol;
}

MinimumReport minimum_nonzero(const BQF& q, const RiverPeriod& period) {
    MinimumReport r;
    r.delta = discriminant(q);
    bool first = true;
    for (const auto& e : period.edges)
        for (const Vec2* v : {&e.p, &e.n}) {
            BigInt a = abs(evaluate(q, *v));
            if (first || a < r.mu) {
                r.mu = a;
                r.witness = *v;
                first = false;
            }
        }
    r.bound_ok = 5 * r.mu * r.mu <= r.delta;
    return r;
}

MinimumReport minimum_nonzero(const BQF& q) { return minimum_nonzero(q, trace_river(q)); }

bool is_reduced_indefinite(const BQF& q) {
    BigInt d = discriminant(q);
    if (d <= 0 || is_square(d)) return false;
    BigInt a2 = 2 * abs(q.a);
    return q.b > 0 && lt_sqrt(q.b, d) && !lt_sqrt(a2 + q.b, d) && lt_sqrt(a2 - q.b, d);
}

BQF rho(const BQF& q) {
    require_indefinite(q);
    BigInt d = discriminant(q);
    BigInt ac = abs(q.c);
    BigInt m = 2 * ac;
    BigInt r;
    if (!lt_sqrt(ac, d)) {
        r = mod_floor(-q.b, m);
        if (r > ac) r -= m;
    } else {
        BigInt s = isqrt(d);
        r = s - mod_floor(s + q.b, m);
    }
    return {q.c, r, (r * r - d) / (4 * q.c)};
}

std::vector<BQF> reduced_cycle(const BQF& q) {
    BQF g = q;
    for (std::size_t it = 0; !is_reduced_indefinite(g); ++it) {
        if (it > kMaxSteps) fail(ErrorKind::Budget, "indefinite reduction did not terminate");
        g = rho(g);
    }
    std::vector<BQF> cyc{g};
    for (BQF h = rho(g); h != g; h = rho(h)) {
        cyc.push_back(h);
        if (cyc.size() > kMaxSteps) fail(ErrorKind::Budget, "reduced cycle too long");
    }
    return cyc;
}

}  // namespace conway
