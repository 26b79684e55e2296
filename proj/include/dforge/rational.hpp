#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dforge {

// Exact arithmetic scalars.  GMP keeps mpq_class canonical (reduced, positive
// denominator), which is exactly the Rational invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) return 0;
    if (Int(k) > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline std::string to_string(const Rat& a) { return a.get_str(); }
inline std::string to_string(const Int& a) { return a.get_str(); }

inline double to_double(const Rat& a) { return a.get_d(); }

}  // namespace dforge
