#pragma once

// Exact arithmetic primitives. Everything in this library is computed over
// arbitrary-precision integers and rationals; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppgf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// binom(a, b) with the convention that it vanishes for b < 0 or b > a (a >= 0).
inline Integer binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_odd(long v) { return (v % 2 + 2) % 2 == 1; }

/// (-1)^e as an Integer.
inline Integer sign_pow(long e) { return is_odd(e) ? Integer(-1) : Integer(1); }

/// Remainder of a divided by b, always in [0, b).
inline long rem(long a, long b) { return ((a % b) + b) % b; }

/// Exact integer value of a rational; throws if the denominator is not 1.
inline Integer rational_to_integer(const Rational& q) {
    if (q.get_den() != 1)
        throw std::domain_error("expected an integer value, got " + q.get_str());
    return q.get_num();
}

}  // namespace ppgf
