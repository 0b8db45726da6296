#pragma once

// Exact rational arithmetic. GMP's mpq_class already maintains the canonical
// form we need (gcd-reduced, positive denominator), so Rational is an alias
// plus a few construction/formatting helpers.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace glambda {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q" and leading '-'.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational acc(1), b(base);
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

}  // namespace glambda
