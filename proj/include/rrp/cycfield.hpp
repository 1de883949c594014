#pragma once

#include <memory>
#include <ostream>
#include <tuple>
#include <vector>

#include "rrp/bigint.hpp"

namespace rrp {

namespace detail {
struct FieldCore;
}

class CycInt;

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Int>;

/*
 * The real cyclotomic field Q(theta), theta = zeta_r + zeta_r^{-1}, for an odd
 * prime r >= 5. Elements are integer vectors on the power basis
 * 1, theta, ..., theta^{d-1}, d = (r-1)/2, which is an integral basis of the
 * maximal order.
 *
 * The minimal polynomial psi_r comes from folding the cyclotomic polynomial:
 * Phi_r(x) = x^d (1 + sum_{k=1}^{d} C_k(x + 1/x)) with C_0 = 2, C_1 = t,
 * C_k = t C_{k-1} - C_{k-2}, so psi_r(t) = 1 + sum_k C_k(t).
 *
 * The handle is cheap to copy; all state is immutable after construction.
 */
class RealCyclotomicField {
public:
    explicit RealCyclotomicField(long r);

    long r() const;
    int degree() const;
    const IntPoly& psi() const;

    CycInt zero() const;
    CycInt one() const;
    CycInt from_int(const Int& n) const;
    CycInt theta() const;
    CycInt from_coeffs(std::vector<Int> coeffs) const;

    /// zeta^k + zeta^{-k}, 0 <= k <= r-1 (memoized at construction).
    CycInt theta_power_sum(long k) const;

    /// pi_r = theta - 2.
    CycInt pi_r() const;

    /// Norm down to Q, the determinant of multiplication by a.
    Int norm(const CycInt& a) const;

    /// Discriminant of psi_r, (-1)^{d(d-1)/2} Norm(psi'(theta)).
    Int psi_discriminant() const;

    bool operator==(const RealCyclotomicField& other) const { return r() == other.r(); }

private:
    friend class CycInt;
    explicit RealCyclotomicField(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}
    std::shared_ptr<const detail::FieldCore> core_;
};

/// Element of Z[theta] in canonical reduced form.
class CycInt {
public:
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    RealCyclotomicField field() const;
    long r() const;

    bool is_zero() const;
    /// True when the element lies in Z (all non-constant coefficients vanish).
    bool is_rational() const;

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt& operator*=(const CycInt& other);
    CycInt& operator*=(const Int& scalar);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend CycInt operator*(CycInt a, const Int& s) { return a *= s; }
    friend CycInt operator*(const Int& s, CycInt a) { return a *= s; }
    CycInt operator-() const;

    bool operator==(const CycInt& other) const;
    bool operator!=(const CycInt& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const CycInt& a);

private:
    friend class RealCyclotomicField;
    CycInt(std::shared_ptr<const detail::FieldCore> core, std::vector<Int> coeffs);
    void check_same_field(const CycInt& other) const;

    std::shared_ptr<const detail::FieldCore> core_;
    std::vector<Int> coeffs_;
};

CycInt pow(const CycInt& base, unsigned exponent);

/// Human-readable polynomial in theta, e.g. "-1 - theta".
std::string to_string(const CycInt& a);

/// x^2 + (zeta^k + zeta^{-k}) x y + y^2; k = 0 gives (x + y)^2.
CycInt f_k_eval(long k, const CycInt& x, const CycInt& y);

/// sum_{i=0}^{r-1} (-1)^i x^{r-1-i} y^i = (x^r + y^r)/(x + y).
CycInt phi_r_eval(const CycInt& x, const CycInt& y);

struct FreyCoefficients {
    CycInt alpha;
    CycInt beta;
    CycInt gamma;
};

/// alpha = s(k3) - s(k2), beta = s(k1) - s(k3), gamma = s(k2) - s(k1),
/// so alpha f_{k1} + beta f_{k2} + gamma f_{k3} vanishes identically.
FreyCoefficients alpha_beta_gamma(const RealCyclotomicField& field, long k1, long k2, long k3);

/// Componentwise least nonnegative residues modulo m >= 2.
std::vector<Int> reduce_mod(const CycInt& a, const Int& m);

/// Coefficient-level helpers on integer polynomials.
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
Int poly_eval(const IntPoly& p, const Int& x);
IntPoly poly_derivative(const IntPoly& p);

}  // namespace rrp
