#pragma once

#include <gmpxx.h>

#include <string>

namespace conway {

using BigInt = mpz_class;

// floor(sqrt(n)) for n >= 0
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);

// Quotient and remainder rounded toward -infinity. b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
// Result lies in [0, |b|).
BigInt mod_floor(const BigInt& a, const BigInt& b);
// Nearest integer to a/b, halves rounded up.
BigInt round_div(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);
// Inverse of a modulo m (m > 0); throws not-invertible when gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

int sign(const BigInt& a);
BigInt abs(const BigInt& a);

std::string to_string(const BigInt& a);
BigInt parse_bigint(const std::string& s);

}  // namespace conway
