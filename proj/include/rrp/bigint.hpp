#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rrp {

using Int = mpz_class;
using Rational = mpq_class;

/// 2-adic (or q-adic) valuation of a nonzero integer.
inline unsigned valuation(const Int& n, unsigned long q) {
    Int quotient = n;
    unsigned v = 0;
    while (quotient != 0 && mpz_divisible_ui_p(quotient.get_mpz_t(), q) != 0) {
        mpz_divexact_ui(quotient.get_mpz_t(), quotient.get_mpz_t(), q);
        ++v;
    }
    return v;
}

/// Valuation of a nonzero rational; negative when q divides the denominator.
inline long valuation(const Rational& x, unsigned long q) {
    return static_cast<long>(valuation(x.get_num(), q)) -
           static_cast<long>(valuation(x.get_den(), q));
}

inline Int pow(const Int& base, unsigned long exponent) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

/// Least nonnegative residue.
inline Int mod(const Int& a, const Int& m) {
    Int out;
    mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return out;
}

inline long mod(long a, long m) {
    long out = a % m;
    return out < 0 ? out + m : out;
}

inline Int gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

/// Deterministic trial-division primality; intended for the small parameters used here.
inline bool is_prime(long n) {
    if (n < 2) {
        return false;
    }
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

inline bool is_squarefree(long n) {
    if (n == 0) {
        return false;
    }
    if (n < 0) {
        n = -n;
    }
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

inline long powmod(long base, long exponent, long m) {
    long result = 1 % m;
    long b = mod(base, m);
    while (exponent > 0) {
        if ((exponent & 1) != 0) {
            result = static_cast<long>((static_cast<__int128>(result) * b) % m);
        }
        b = static_cast<long>((static_cast<__int128>(b) * b) % m);
        exponent >>= 1;
    }
    return result;
}

/// Inverse of a modulo a prime m via Fermat.
inline long invmod_prime(long a, long m) { return powmod(a, m - 2, m); }

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace rrp
