#include "conway/bigint.hpp"

#include "conway/error.hpp"

namespace conway {

BigInt isqrt(const BigInt& n) {
    if (n < 0) fail(ErrorKind::Precondition, "isqrt of negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
    BigInt r;
    BigInt m = abs(b);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt round_div(const BigInt& a, const BigInt& b) {
    BigInt num = a, den = b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt twice = 2 * num + den;
    BigInt d2 = 2 * den;
    return floor_div(twice, d2);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    if (m == 1) return 0;
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::NotInvertible, "no inverse of " + to_string(a) + " mod " + to_string(m));
    return r;
}

int sign(const BigInt& a) { return sgn(a); }

BigInt abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

std::string to_string(const BigInt& a) { return a.get_str(); }

BigInt parse_bigint(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    BigInt r;
    if (t.empty() || r.set_str(t, 10) != 0) fail(ErrorKind::Parse, "not an integer: '" + s + "'");
    return r;
}

}  // namespace conway
