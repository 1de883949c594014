#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrp/bigint.hpp"

namespace rrp {

/// Polynomial over GF(2), bit i of the limb vector is the coefficient of x^i.
class F2Poly {
public:
    F2Poly() = default;
    /// From a bit mask (bit i = coefficient of x^i).
    static F2Poly from_mask(std::uint64_t mask);
    /// Reduce integer coefficients modulo 2.
    static F2Poly from_ints(const std::vector<Int>& coeffs);
    static F2Poly monomial(unsigned degree);

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool value);

    F2Poly& operator+=(const F2Poly& other);
    friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
    bool operator==(const F2Poly& other) const { return limbs_ == other.limbs_; }
    bool operator!=(const F2Poly& other) const { return limbs_ != other.limbs_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<F2Poly, F2Poly> divmod(const F2Poly& divisor) const;
    F2Poly operator%(const F2Poly& divisor) const { return divmod(divisor).second; }
    F2Poly operator/(const F2Poly& divisor) const { return divmod(divisor).first; }

    F2Poly derivative() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

F2Poly gcd(F2Poly a, F2Poly b);

/// base^(2^k) mod m.
F2Poly frobenius_power(const F2Poly& base, unsigned k, const F2Poly& m);

/// (degree, count) of irreducible factors of a squarefree polynomial.
using DegreeMultiset = std::map<int, int>;

/*
 * Distinct-degree factorization. For d = 1, 2, ... the product of the
 * irreducible factors of degree d is gcd(rest, x^{2^d} - x); only degrees and
 * counts are reported. Throws std::invalid_argument for a non-squarefree or
 * constant input.
 */
DegreeMultiset ddf_degrees(const F2Poly& p);

bool is_irreducible(const F2Poly& p);

/// Finite field GF(2^f) = GF(2)[t]/(modulus).
class F2Field {
public:
    /// Throws if the modulus is not irreducible.
    explicit F2Field(F2Poly modulus);
    /// Lexicographically least irreducible modulus of degree f (smallest bit mask).
    static F2Field standard(int f);

    int degree() const { return modulus_.degree(); }
    const F2Poly& modulus() const { return modulus_; }
    bool operator==(const F2Field& other) const { return modulus_ == other.modulus_; }

private:
    F2Poly modulus_;
};

class F2fElem {
public:
    F2fElem(F2Field field, F2Poly rep);
    static F2fElem zero(const F2Field& field) { return {field, F2Poly{}}; }
    static F2fElem one(const F2Field& field) { return {field, F2Poly::from_mask(1)}; }

    const F2Field& field() const { return field_; }
    const F2Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend F2fElem operator+(const F2fElem& a, const F2fElem& b);
    friend F2fElem operator*(const F2fElem& a, const F2fElem& b);
    bool operator==(const F2fElem& other) const { return field_ == other.field_ && rep_ == other.rep_; }
    bool operator!=(const F2fElem& other) const { return !(*this == other); }

    F2fElem square() const { return *this * *this; }
    F2fElem inverse() const;

private:
    F2Field field_;
    F2Poly rep_;
};

/// Absolute trace to GF(2), returned as 0 or 1.
int trace_f2f(const F2fElem& a);

/// The unique square root a^{2^{f-1}}.
F2fElem sqrt_f2f(const F2fElem& a);

/// Some v with v^2 + v = c, or nullopt when the trace of c is 1.
std::optional<F2fElem> solve_artin_schreier(const F2fElem& c);

/// All 2^f elements in mask order (for exhaustive tests, f <= 20).
std::vector<F2fElem> all_elements(const F2Field& field);

}  // namespace rrp
