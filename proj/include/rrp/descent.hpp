#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "rrp/bigint.hpp"
#include "rrp/cycfield.hpp"
#include "rrp/frey.hpp"

namespace rrp {

/// Exact element of Q(theta) as num / den with den > 0 and content(num, den) = 1.
class KElem {
public:
    KElem(CycInt num, Int den = 1);
    static KElem from_int(const RealCyclotomicField& field, long n) { return KElem(field.from_int(n)); }

    const CycInt& num() const { return num_; }
    const Int& den() const { return den_; }
    RealCyclotomicField field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    KElem& operator+=(const KElem& other);
    KElem& operator-=(const KElem& other);
    KElem& operator*=(const KElem& other);
    KElem& operator/=(const KElem& other);
    friend KElem operator+(KElem a, const KElem& b) { return a += b; }
    friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
    friend KElem operator*(KElem a, const KElem& b) { return a *= b; }
    friend KElem operator/(KElem a, const KElem& b) { return a /= b; }
    KElem operator-() const { return KElem(-num_, den_); }
    bool operator==(const KElem& other) const { return num_ == other.num_ && den_ == other.den_; }

    KElem inverse() const;

private:
    void normalize();
    CycInt num_;
    Int den_;
};

inline Rational constant_like(const Rational&, long n) { return Rational(n); }
inline KElem constant_like(const KElem& x, long n) { return KElem::from_int(x.field(), n); }

/// lambda + mu = 1.
template <typename Field>
struct DescentPair {
    Field lambda;
    Field mu;
};

/*
 * From mu = tau^2 and lambda = 1 - tau^2 = (1 - tau)(1 + tau), produce the new
 * S-unit solution (lambda', mu') = (-(1 - tau)^2 / (4 tau), (1 + tau)^2 / (4 tau)).
 * Throws std::invalid_argument for tau in {0, 1, -1}.
 */
template <typename Field>
DescentPair<Field> descent_step(const Field& tau) {
    const Field zero = constant_like(tau, 0);
    const Field one = constant_like(tau, 1);
    if (tau == zero || tau == one || tau == -one) {
        throw std::invalid_argument("descent_step: tau must not be 0 or +-1");
    }
    const Field lambda1 = one - tau;
    const Field lambda2 = one + tau;
    const Field four_tau = constant_like(tau, 4) * tau;
    return {-(lambda1 * lambda1) / four_tau, (lambda2 * lambda2) / four_tau};
}

struct ValuationGrowth {
    bool sign_flipped = false;  // tau replaced by -tau so that v(1 + tau) = e
    long before = 0;            // v(1 - tau^2)
    long after = 0;             // v(lambda')
};

/*
 * Valuation bookkeeping for one descent step at a prime with v(2) = e:
 * choose the sign of tau with v(1 + tau) = e, then report v(lambda) and
 * v(lambda'). When v(lambda) > 4e the step gives v(lambda') = 2 v(lambda) - 4e.
 * `val` maps a nonzero field element to its valuation.
 */
template <typename Field, typename Valuation>
ValuationGrowth descent_valuation_growth(Field tau, Valuation val, long e) {
    const Field one = constant_like(tau, 1);
    ValuationGrowth out;
    if (val(one + tau) != e) {
        tau = -tau;
        out.sign_flipped = true;
    }
    out.before = val(one - tau * tau);
    out.after = val(descent_step(tau).lambda);
    return out;
}

/// theta_power_sum((r-1)/2)^2 == pi_r + 4.
bool pi_plus_four_identity(const RealCyclotomicField& field);

struct NormCondition {
    /// True when the norm-level congruence is solvable, i.e. squareness of pi_r
    /// is NOT ruled out.
    bool survives = false;
    long target = 0;         // right-hand side of the system

    bool brute_force = false;
    bool closed_form = false;
    long modulus = 0;        // 32 or 16
    std::string residue_case;  // "Q", "d = 5 mod 8", "d = 2,3 mod 4"
    std::optional<std::pair<long, long>> witness;  // (a, b), or (v, 0) over Q
};

/// Norm of pi_r from Q(theta_r) (equivalently from K+ to K): (-1)^((r-1)/2) r.
long signed_norm_pi_r(long r);

/*
 * Residue system for "t is a norm-square" modulo the power of 2 reached by
 * taking norms of pi_r = nu^2 mod P^{4e+1} down to K:
 *   K = Q (base_d = 0):  t = v^2 mod 32;
 *   d = 5 mod 8:         a^2 + b^2 (d-1)/4 = t and b^2 + 2ab = 0 mod 32;
 *   d = 2, 3 mod 4:      a^2 + b^2 d = t and 2ab = 0 mod 16.
 * Decided by exhaustive search and by the closed form (t = 1 mod 8, or
 * t = d mod 8 for quadratic d); a disagreement throws std::logic_error.
 * d = 1 mod 8 (2 splits in K) and r | d are rejected.
 */
NormCondition norm_residue_system(long base_d, long r, long target);

/// The system with t = signed_norm_pi_r(r). False means pi_r is not a square
/// mod P^{4e+1}; true means the norm does not rule it out.
NormCondition norm_necessary_condition_detail(long base_d, long r);
bool norm_necessary_condition(long base_d, long r);

}  // namespace rrp
