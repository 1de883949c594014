#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrp/cycfield.hpp"

namespace rrp {

class DegenerateCurve : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnfactoredCofactor : public std::runtime_error {
public:
    UnfactoredCofactor(const std::string& what, Int cofactor)
        : std::runtime_error(what), cofactor_(std::move(cofactor)) {}
    const Int& cofactor() const { return cofactor_; }

private:
    Int cofactor_;
};

/// Y^2 = X (X - A)(X + B) with A + B + C = 0.
struct FreyCurve {
    RealCyclotomicField field;
    std::optional<std::array<long, 3>> indices;  // (k1, k2, k3) when built from a pair
    std::optional<CycInt> x;
    std::optional<CycInt> y;
    CycInt a;
    CycInt b;
    CycInt c;
};

/// A = alpha f_{k1}(x, y), B = beta f_{k2}(x, y), C = gamma f_{k3}(x, y).
FreyCurve frey_curve(const RealCyclotomicField& field, const CycInt& x, const CycInt& y, long k1, long k2, long k3);

/// Curve from explicit A and B (C = -A - B), for checks on synthetic data.
FreyCurve frey_curve_from_ab(const CycInt& a, const CycInt& b);

struct FreyInvariants {
    CycInt delta;  // 2^4 (ABC)^2
    CycInt c4;     // 2^4 (A^2 + AB + B^2) = -2^4 (AB + BC + CA)
    CycInt j_num;  // -2^8 (AB + BC + CA)^3
    CycInt j_den;  // (ABC)^2
};

/// Throws DegenerateCurve when ABC = 0.
FreyInvariants invariants(const FreyCurve& curve);

/// A prime of Q(theta) at which valuations are computed.
struct DesignatedPrime {
    enum class Kind { inert_two, split_odd };
    Kind kind = Kind::inert_two;
    long q = 2;
    long root = 0;  // simple root of psi_r mod q (split_odd only)

    static DesignatedPrime inert_two() { return {}; }
    static DesignatedPrime split(long q, long root) { return {Kind::split_odd, q, root}; }
};

/*
 * v_q(a) at the degree-one prime (q, theta - root): theta is sent to the
 * Hensel lift of `root` modulo q^k, k growing until a(root) is nonzero.
 * Requires q odd, q != r, psi_r(root) = 0 and psi_r'(root) != 0 mod q, a != 0.
 */
long valuation_at_split_prime(const CycInt& a, long q, long root);

/// Valuation at a designated prime; for the inert prime 2 it is the least 2-adic
/// valuation of the coordinates.
long valuation(const CycInt& a, const DesignatedPrime& prime);

/// Simple roots of psi_r modulo an odd prime q (degree-one primes above q).
std::vector<long> simple_roots_mod(const RealCyclotomicField& field, long q);

struct PairIndex {
    long i = 0;
    long j = 0;
    Int ideal_norm;  // norm of the ideal (f_i, f_j)
};

struct CoprimalityReport {
    bool coprime_outside_r = true;
    std::optional<PairIndex> offending;
    std::vector<PairIndex> pairs;
};

/*
 * For rational coprime x, y: every ideal (f_i(x,y), f_j(x,y)), i < j, must have
 * norm a power of r. The ideal norm is the index of the Z-lattice spanned by
 * f_i theta^k and f_j theta^k in Z[theta].
 */
CoprimalityReport coprimality_check(const RealCyclotomicField& field, const Int& x, const Int& y);

/// Rational primes q not in {2, r} dividing Norm(ABC), with v_q(Norm(ABC)).
/// Throws UnfactoredCofactor if trial division up to the bound leaves a cofactor.
std::map<Int, unsigned> conductor_support_outside_S(const FreyCurve& curve, long smoothness_bound);

/// v(j) == 8 v(2) - 2 v(A) at a prime dividing A but not BC.
bool j_valuation_identity_check(const FreyCurve& curve, const DesignatedPrime& prime);

/// First k with f_k(x, y) = 0 mod 2, when 2 is inert in Q(theta).
std::optional<long> find_k1(const RealCyclotomicField& field, const CycInt& x, const CycInt& y);

}  // namespace rrp
