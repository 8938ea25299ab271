#include "conway/hermitian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "conway/error.hpp"

namespace conway {

namespace {

void check_ring(Ring r) {
    if (r != Ring::Gauss && r != Ring::Eisenstein)
        fail(ErrorKind::UnsupportedRing, std::string("Hermitian forms live over Gauss or Eisenstein, not ") + ring_name(r));
}

bool vec_less(const RVec& p, const RVec& q) {
    if (p[0] != q[0]) return p[0] < q[0];
    return p[1] < q[1];
}

bool unimodular(const RVec& p, const RVec& q) { return is_unit(p[0] * q[1] - p[1] * q[0]); }

}  // namespace

BHF::BHF(Ring r, BigInt a_, RingElement gamma_, BigInt c_)
    : ring(r), a(std::move(a_)), c(std::move(c_)), gamma(std::move(gamma_)) {
    check_ring(r);
    if (gamma.ring != r) fail(ErrorKind::TagMismatch, "gamma lives in the wrong ring");
}

std::string BHF::str() const {
    return std::string(ring == Ring::Gauss ? "G" : "E") + "(" + to_string(a) + "," + gamma.str() + "," + to_string(c) + ")";
}

RingElement different_generator(Ring r) {
    check_ring(r);
    return r == Ring::Gauss ? RingElement(r, 1, 1) : RingElement(r, 1, -1);
}

BigInt evaluate(const BHF& h, const RingElement& x, const RingElement& y) {
    RingElement pi = different_generator(h.ring);
    BigInt np = norm(pi);
    BigInt t = trace(h.gamma * conj(pi) * conj(x) * y);
    if (!mpz_divisible_p(t.get_mpz_t(), np.get_mpz_t()))
        fail(ErrorKind::InvariantViolation, "non-integral Hermitian value for " + h.str());
    return h.a * norm(x) + t / np + h.c * norm(y);
}

BigInt evaluate(const BHF& h, const RVec& v) { return evaluate(h, v[0], v[1]); }

BigInt discriminant(const BHF& h) {
    BigInt ng = norm(h.gamma);
    if (h.ring == Ring::Gauss) return 2 * ng - 4 * h.a * h.c;
    return ng - 3 * h.a * h.c;
}

bool is_superbasis(const RVec& p, const RVec& q, const RVec& r) {
    return unimodular(p, q) && unimodular(p, r) && unimodular(q, r);
}

RVec lax(const RVec& v) {
    RVec best = v;
    for (const auto& e : units(v[0].ring)) {
        RVec w{e * v[0], e * v[1]};
        if (vec_less(w, best)) best = w;
    }
    return best;
}

std::vector<RVec> candidate_vectors(Ring r) {
    check_ring(r);
    std::vector<RingElement> elems;
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            RingElement e(r, x, y);
            if (norm(e) <= 4) elems.push_back(e);
        }
    std::set<RVec, decltype(&vec_less)> seen(&vec_less);
    for (const auto& x : elems)
        for (const auto& y : elems) {
            if (x.is_zero() && y.is_zero()) continue;
            seen.insert(lax(RVec{x, y}));
        }
    return {seen.begin(), seen.end()};
}

std::array<RVec, 3> standard_seed(Ring r) {
    check_ring(r);
    RingElement one = RingElement::one(r), zero = RingElement::zero(r);
    return {RVec{one, zero}, RVec{zero, one}, RVec{one, one}};
}

namespace {

bool distinct_lax(const std::vector<RVec>& vs) {
    std::set<RVec, decltype(&vec_less)> s(&vec_less);
    for (const auto& v : vs) s.insert(lax(v));
    return s.size() == vs.size();
}

void require_seed(const std::array<RVec, 3>& seed) {
    check_ring(seed[0][0].ring);
    if (!is_superbasis(seed[0], seed[1], seed[2]))
        fail(ErrorKind::Precondition, "seed triple is not pairwise unimodular");
}

}  // namespace

bool is_cubasis(const Cubasis& c) {
    for (int m = 0; m < 8; ++m) {
        const RVec& x = (m & 1) ? c.second[0] : c.first[0];
        const RVec& y = (m & 2) ? c.second[1] : c.first[1];
        const RVec& z = (m & 4) ? c.second[2] : c.first[2];
        if (!is_superbasis(x, y, z)) return false;
    }
    return distinct_lax({c.first[0], c.first[1], c.first[2], c.second[0], c.second[1], c.second[2]});
}

bool is_tetrabasis(const Tetrabasis& t) {
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<RVec> tri;
        for (int k = 0; k < 4; ++k)
            if (k != skip) tri.push_back(t.v[k]);
        if (!is_superbasis(tri[0], tri[1], tri[2])) return false;
    }
    return distinct_lax({t.v[0], t.v[1], t.v[2], t.v[3]});
}

std::vector<Cubasis> all_cubases(const std::array<RVec, 3>& seed) {
    require_seed(seed);
    const auto& [u1, v1, w1] = seed;
    auto cands = candidate_vectors(u1[0].ring);
    std::vector<Cubasis> out;
    for (const auto& u2 : cands) {
        if (!is_superbasis(u2, v1, w1)) continue;
        for (const auto& v2 : cands) {
            if (!is_superbasis(u1, v2, w1) || !is_superbasis(u2, v2, w1)) continue;
            for (const auto& w2 : cands) {
                Cubasis c{{u1, v1, w1}, {u2, v2, w2}};
                if (is_cubasis(c)) out.push_back(c);
            }
        }
    }
    return out;
}

Cubasis find_cubasis(const std::array<RVec, 3>& seed) {
    auto all = all_cubases(seed);
    if (all.empty()) fail(ErrorKind::SearchExhausted, "no cubasis with coordinate norms <= 4");
    return all.front();
}

std::vector<Tetrabasis> all_tetrabases(const std::array<RVec, 3>& seed) {
    require_seed(seed);
    std::vector<Tetrabasis> out;
    for (const auto& x : candidate_vectors(seed[0][0].ring)) {
        Tetrabasis t{{seed[0], seed[1], seed[2], x}};
        if (is_tetrabasis(t)) out.push_back(t);
    }
    return out;
}

Tetrabasis find_tetrabasis(const std::array<RVec, 3>& seed) {
    auto all = all_tetrabases(seed);
    if (all.empty()) fail(ErrorKind::SearchExhausted, "no tetrabasis with coordinate norms <= 4");
    return all.front();
}

const char* cube_pattern_name(CubePattern p) {
    switch (p) {
        case CubePattern::Uniform: return "uniform";
        case CubePattern::I: return "I";
        case CubePattern::II: return "II";
        case CubePattern::III: return "III";
        case CubePattern::IV: return "IV";
        case CubePattern::MixedZero: return "mixed-zero";
    }
    return "?";
}

CubePattern classify_cube(const CubeValues& cv) {
    const BigInt* pairs[3][2] = {{&cv.a, &cv.u}, {&cv.b, &cv.v}, {&cv.c, &cv.w}};
    std::vector<int> unsplit;
    int split = 0;
    for (auto& p : pairs) {
        int s0 = sign(*p[0]), s1 = sign(*p[1]);
        if (s0 == 0 || s1 == 0) return CubePattern::MixedZero;
        if (s0 != s1)
            ++split;
        else
            unsplit.push_back(s0);
    }
    switch (split) {
        case 3: return CubePattern::III;
        case 2: return CubePattern::II;
        case 1: return unsplit[0] == unsplit[1] ? CubePattern::I : CubePattern::IV;
        default:
            return unsplit[0] == unsplit[1] && unsplit[1] == unsplit[2] ? CubePattern::Uniform : CubePattern::IV;
    }
}

CubeValues cube_values(const BHF& h, const Cubasis& cub) {
    if (h.ring != Ring::Gauss) fail(ErrorKind::UnsupportedRing, "cubases belong to the Gaussian geometry");
    CubeValues cv;
    cv.a = evaluate(h, cub.first[0]);
    cv.b = evaluate(h, cub.first[1]);
    cv.c = evaluate(h, cub.first[2]);
    cv.u = evaluate(h, cub.second[0]);
    cv.v = evaluate(h, cub.second[1]);
    cv.w = evaluate(h, cub.second[2]);
    cv.z = cv.a + cv.u;
    if (cv.b + cv.v != cv.z || cv.c + cv.w != cv.z)
        fail(ErrorKind::InvariantViolation, "opposite cube faces do not share a common sum for " + h.str());
    if (cv.z * cv.z - 2 * cv.a * cv.u - 2 * cv.b * cv.v - 2 * cv.c * cv.w != discriminant(h))
        fail(ErrorKind::InvariantViolation, "cube discriminant identity fails for " + h.str());
    cv.pattern = classify_cube(cv);
    return cv;
}

HermitianMinimum empirical_minimum(const BHF& h, long box) {
    HermitianMinimum m;
    m.delta = discriminant(h);
    if (m.delta <= 0) fail(ErrorKind::Precondition, "empirical minimum needs a positive discriminant");
    if (box < 1 || box > 30) fail(ErrorKind::Budget, "box must lie in 1..30");
    bool have = false;
    long best_h = 0;
    Ring r = h.ring;
    for (long x0 = -box; x0 <= box; ++x0)
        for (long x1 = -box; x1 <= box; ++x1)
            for (long y0 = -box; y0 <= box; ++y0)
                for (long y1 = -box; y1 <= box; ++y1) {
                    if (x0 == 0 && x1 == 0 && y0 == 0 && y1 == 0) continue;
                    RVec v{RingElement(r, x0, x1), RingElement(r, y0, y1)};
                    BigInt val = evaluate(h, v);
                    if (val == 0)
                        fail(ErrorKind::Degenerate, h.str() + " vanishes at (" + v[0].str() + ", " + v[1].str() + ")");
                    BigInt a = abs(val);
                    // ties go to the smallest sup-norm so the witness is readable
                    long ht = std::max({std::labs(x0), std::labs(x1), std::labs(y0), std::labs(y1)});
                    if (!have || a < m.mu || (a == m.mu && ht < best_h)) {
                        m.mu = a;
                        m.witness = v;
                        best_h = ht;
                        have = true;
                    }
                }
    m.bound_ok = 6 * m.mu * m.mu <= m.delta;
    return m;
}

}  // namespace conway
