#pragma once

#include <gmpxx.h>

#include <string>

namespace ade {

// Arbitrary-precision exact scalars. mpq_class keeps gcd(|num|, den) = 1 and
// den > 0 for all arithmetic results as long as inputs are canonical, which
// the factory functions below guarantee.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a" or "a/b".
inline Rat rat_parse(const std::string& s) {
    Rat r(s.c_str());
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Ring-concept helpers used by the generic series layer; every coefficient
// ring provides these three.
inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline std::string ring_str(const Rat& x) { return x.get_str(); }
inline Rat inverse(const Rat& x) { return Rat(1) / x; }

}  // namespace ade
