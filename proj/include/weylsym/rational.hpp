#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weylsym {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class does not canonicalize two-argument constructions on its own;
// every Rational built from a num/den pair must go through here.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// n·(n−1)···(n−len+1); empty product for len = 0.
inline Integer falling_factorial(long n, unsigned long len) {
    Integer r = 1;
    for (unsigned long i = 0; i < len; ++i) r *= Integer(n - long(i));
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace weylsym
