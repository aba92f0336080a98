#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qzeta {

// Exact rational arithmetic, GMP-backed. All values are kept canonical
// (lowest terms, positive denominator); GMP arithmetic preserves this as
// long as every entry point canonicalizes, which rat() and
// rational_from_string() do.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "num", "-num" or "num/den" in base 10.
inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// d^e as an exact integer.
inline Integer int_pow(long d, unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d), e);
    if (d < 0 && e % 2 == 1) p = -p;
    return p;
}

}  // namespace qzeta
