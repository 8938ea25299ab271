#include "conway/classgroup.hpp"

#include <algorithm>
#include <set>

#include "conway/error.hpp"
#include "conway/reduction.hpp"

namespace conway {

void check_discriminant(const BigInt& delta) {
    BigInt r = mod_floor(delta, 4);
    if (delta == 0 || r > 1)
        fail(ErrorKind::InvalidDiscriminant, "discriminant " + to_string(delta) + " is not 0 or 1 mod 4 or is zero");
    if (delta > 0 && is_square(delta))
        fail(ErrorKind::SquareOrInvalidDiscriminant, "discriminant " + to_string(delta) + " is a square");
}

BQF principal_form(const BigInt& delta) {
    check_discriminant(delta);
    if (mod_floor(delta, 4) == 0) return {1, 0, -delta / 4};
    return {1, 1, (1 - delta) / 4};
}

BQF canonical_form(const BQF& q) {
    BigInt d = discriminant(q);
    if (d < 0) return reduce_definite(q);
    auto cyc = reduced_cycle(q);
    return *std::min_element(cyc.begin(), cyc.end());
}

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
    BigInt m = abs(n);
    std::vector<BigInt> small, large;
    for (BigInt k = 1; k * k <= m; ++k)
        if (mpz_divisible_p(m.get_mpz_t(), k.get_mpz_t())) {
            small.push_back(k);
            BigInt o = m / k;
            if (o != k) large.push_back(o);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

ClassGroupTable enumerate_classes(const BigInt& delta) {
    check_discriminant(delta);
    ClassGroupTable t;
    t.delta = delta;
    if (delta < 0) {
        BigInt ad = -delta;
        for (BigInt a = 1; 3 * a * a <= ad; ++a)
            for (BigInt b = -a + 1; b <= a; ++b) {
                BigInt num = b * b - delta;
                if (!mpz_divisible_p(num.get_mpz_t(), BigInt(4 * a).get_mpz_t())) continue;
                BQF f(a, b, num / (4 * a));
                if (is_reduced_definite(f) && is_primitive(f)) t.classes.push_back(f);
            }
    } else {
        std::set<BQF> reduced;
        BigInt s = isqrt(delta);
        for (BigInt b = 1; b <= s; ++b) {
            BigInt num = b * b - delta;
            if (mod_floor(num, 4) != 0) continue;
            BigInt n = num / 4;
            for (const auto& d : divisors(n))
                for (const BigInt& a : {d, BigInt(-d)}) {
                    BQF f(a, b, n / a);
                    if (is_reduced_indefinite(f) && is_primitive(f)) reduced.insert(f);
                }
        }
        std::set<BQF> seen;
        for (const auto& f : reduced) {
            if (seen.count(f)) continue;
            auto cyc = reduced_cycle(f);
            seen.insert(cyc.begin(), cyc.end());
            t.classes.push_back(*std::min_element(cyc.begin(), cyc.end()));
        }
    }
    std::sort(t.classes.begin(), t.classes.end());
    t.identity = class_index(t, principal_form(delta));
    return t;
}

std::size_t class_index(const ClassGroupTable& t, const BQF& q) {
    BQF c = canonical_form(q);
    auto it = std::lower_bound(t.classes.begin(), t.classes.end(), c);
    if (it == t.classes.end() || *it != c)
        fail(ErrorKind::Precondition, q.str() + " is not a class of discriminant " + to_string(t.delta));
    return static_cast<std::size_t>(it - t.classes.begin());
}

BQF inverse_form(const BQF& q) { return {q.a, -q.b, q.c}; }

BQF compose(const BQF& f, const BQF& g) {
    BigInt delta = discriminant(f);
    if (discriminant(g) != delta) fail(ErrorKind::Precondition, "composition of forms with different discriminants");
    if (!is_primitive(f) || !is_primitive(g)) fail(ErrorKind::NotPrimitive, "composition needs primitive forms");
    BQF f1 = canonical_form(f);
    BQF g1 = canonical_form(g);
    // Move g to an equivalent form whose first coefficient is prime to f1.a.
    BQF g2;
    bool found = false;
    for (long r = 1; r <= 64 && !found; ++r)
        for (long x = 0; x <= r && !found; ++x)
            for (long y : {r - x, x - r}) {
                BigInt bx = x, by = y;
                if (gcd(bx, by) != 1) continue;
                Vec2 v(bx, by);
                BigInt val = evaluate(g1, v);
                if (val == 0 || gcd(val, f1.a) != 1) continue;
                BigInt s, t, gg;
                mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), bx.get_mpz_t(), by.get_mpz_t());
                // x s - y (-t) = 1
                g2 = transform(g1, Mat2::integer(bx, -t, by, s));
                found = true;
                break;
            }
    if (!found) fail(ErrorKind::SearchExhausted, "no coprime representative found for composition");
    const BigInt& a1 = f1.a;
    const BigInt& a2 = g2.a;
    BigInt m = abs(a2);
    BigInt half = (g2.b - f1.b) / 2;
    BigInt k = mod_floor(half * inverse_mod(mod_floor(a1, m), m), m);
    BigInt big_b = f1.b + 2 * a1 * k;
    BigInt num = big_b * big_b - delta;
    BigInt den = 4 * a1 * a2;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        fail(ErrorKind::InvariantViolation, "Dirichlet composition produced a non-integral form");
    return canonical_form(BQF(a1 * a2, big_b, num / den));
}

std::size_t compose(const ClassGroupTable& t, std::size_t i, std::size_t j) {
    return class_index(t, compose(t.classes.at(i), t.classes.at(j)));
}

ClassGroupTable class_group(const BigInt& delta) {
    ClassGroupTable t = enumerate_classes(delta);
    std::size_t h = t.classes.size();
    t.table.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) t.table[i][j] = compose(t, i, j);
    return t;
}

GroupAxioms check_group_axioms(const ClassGroupTable& t) {
    GroupAxioms g;
    std::size_t h = t.classes.size();
    if (t.table.size() != h) fail(ErrorKind::Precondition, "class group table missing");
    g.identity = g.inverses = g.associative = g.commutative = true;
    for (std::size_t i = 0; i < h; ++i) {
        if (t.table[t.identity][i] != i) g.identity = false;
        std::size_t inv = class_index(t, inverse_form(t.classes[i]));
        if (t.table[i][inv] != t.identity) g.inverses = false;
        for (std::size_t j = 0; j < h; ++j) {
            if (t.table[i][j] != t.table[j][i]) g.commutative = false;
            for (std::size_t k = 0; k < h; ++k)
                if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]]) g.associative = false;
        }
    }
    return g;
}

bool is_diform_discriminant(int sigma, const BigInt& delta) {
    if (delta == 0 || !mpz_divisible_ui_p(delta.get_mpz_t(), static_cast<unsigned long>(sigma))) return false;
    BigInt r = mod_floor(delta / sigma, 4);
    return r == 0 || r == sigma % 4;
}

BQF ambiguous_form(int sigma, const BigInt& delta) {
    if (sigma != 2 && sigma != 3) fail(ErrorKind::Precondition, "sigma must be 2 or 3");
    if (delta == 0 || !mpz_divisible_ui_p(delta.get_mpz_t(), static_cast<unsigned long>(sigma)))
        fail(ErrorKind::Divisibility, std::to_string(sigma) + " does not divide " + to_string(delta));
    if (!is_diform_discriminant(sigma, delta))
        fail(ErrorKind::InvalidDiscriminant, to_string(delta) + " is not a diform discriminant for sigma " + std::to_string(sigma));
    BigInt q = delta / sigma;
    BQF a = mod_floor(q, 4) == 0 ? BQF(sigma, 0, -delta / (4 * sigma))
                                 : BQF(sigma, sigma, -(delta - sigma * sigma) / (4 * sigma));
    if (!is_primitive(a)) fail(ErrorKind::NotPrimitive, "A form " + a.str() + " is not primitive");
    return a;
}

BigInt representation_bound(const BigInt& delta) {
    BigInt ad = abs(delta);
    BigInt r = isqrt(ad);
    if (r * r != ad) ++r;
    return 2 * (1 + r);
}

bool represents(const BQF& q, const BigInt& n, const BigInt& bound) {
    for (BigInt x = 0; x <= bound; ++x)
        for (BigInt y = -bound; y <= bound; ++y) {
            if (x == 0 && y <= 0) continue;
            if (evaluate(q, Vec2(x, y)) == n) return true;
        }
    return false;
}

bool class_represents(const BQF& q, const BigInt& n) {
    BigInt d = discriminant(q);
    BigInt bound = representation_bound(d);
    if (d < 0) return represents(reduce_definite(q), n, bound);
    for (const auto& f : reduced_cycle(q))
        if (represents(f, n, bound)) return true;
    return false;
}

namespace {

void require_nondegenerate(const BQD& q) {
    FormClass k = classify(q);
    if (k == FormClass::Degenerate)
        fail(ErrorKind::SquareOrInvalidDiscriminant, q.str() + " is degenerate");
    if (k == FormClass::NegativeDefinite)
        fail(ErrorKind::Classification, q.str() + " is negative-definite");
}

}  // namespace

RedBlueReport verify_red_blue(const BQD& q) {
    require_nondegenerate(q);
    BigInt bs = q.b * q.sigma;
    if (gcd(q.a, bs) != 1 || gcd(q.a, q.c) != 1 || gcd(bs, q.c) != 1)
        fail(ErrorKind::Precondition, "coefficients a, b sigma, c of " + q.str() + " are not pairwise coprime");
    RedBlueReport r;
    r.delta = discriminant(q);
    ClassGroupTable t = enumerate_classes(r.delta);
    r.red = canonical_form(q_red(q));
    r.blue = canonical_form(q_blue(q));
    r.ambiguous = canonical_form(ambiguous_form(q.sigma, r.delta));
    r.red_index = class_index(t, r.red);
    r.blue_index = class_index(t, r.blue);
    r.ambiguous_index = class_index(t, r.ambiguous);
    r.holds = compose(r.ambiguous, r.blue) == r.red;
    return r;
}

std::optional<BQD> red_blue_converse(int sigma, const BQF& q1, const BQF& q2, long b_bound) {
    BigInt delta = discriminant(q1);
    if (discriminant(q2) != delta) fail(ErrorKind::Precondition, "forms have different discriminants");
    BQF a = ambiguous_form(sigma, delta);
    BQF c1 = canonical_form(q1), c2 = canonical_form(q2);
    if (compose(a, c2) != c1) fail(ErrorKind::Precondition, "[q1] != [A][q2]");
    for (long k = 0; k <= 2 * b_bound; ++k) {
        long b = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        BigInt bb = b;
        BigInt num = sigma * bb * bb - delta / sigma;
        if (mod_floor(num, 4) != 0) continue;
        BigInt n = num / 4;  // = a c
        if (n == 0) continue;
        for (const auto& d : divisors(n))
            for (const BigInt& x : {d, BigInt(-d)}) {
                if (delta < 0 && x < 0) continue;
                BQD cand(sigma, x, bb, n / x);
                BQF r = q_red(cand), bl = q_blue(cand);
                if (!is_primitive(r) || !is_primitive(bl)) continue;
                if (canonical_form(r) == c1 && canonical_form(bl) == c2) return cand;
            }
    }
    return std::nullopt;
}

}  // namespace conway
