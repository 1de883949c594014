#pragma once

#include <string>
#include <vector>

#include "rrp/cycfield.hpp"

namespace rrp {

struct PrimeAbove {
    int e = 1;  // ramification index
    int f = 1;  // residue degree
    bool operator==(const PrimeAbove&) const = default;
};

/// Decomposition of a rational prime in a number field (or, for a degenerate
/// compositum, in the etale algebra K (x) Q(theta)).
class SplittingReport {
public:
    /// Throws std::logic_error unless sum e_i f_i == field_degree.
    SplittingReport(long rational_prime, int field_degree, std::vector<PrimeAbove> primes, std::string note = {});

    long rational_prime() const { return rational_prime_; }
    int field_degree() const { return field_degree_; }
    const std::vector<PrimeAbove>& primes() const { return primes_; }
    bool unique() const { return primes_.size() == 1; }
    bool inert() const { return unique() && primes_[0].e == 1 && primes_[0].f == field_degree_; }
    /// Non-empty when the ambient algebra is not a field.
    const std::string& note() const { return note_; }

private:
    long rational_prime_;
    int field_degree_;
    std::vector<PrimeAbove> primes_;
    std::string note_;
};

/// 2 in Q(theta_r): unramified, residue degrees from the distinct-degree factorization of psi_r mod 2.
SplittingReport split_2_in_Qplus(long r);

/// 2 in Q(sqrt d), d squarefree > 1.
SplittingReport split_2_in_quadratic(long d);

/*
 * 2 in K+ = Q(sqrt d, theta_r), by the tower over each prime q | 2 of Q(theta_r)
 * (residue degree f): d = 2 mod 4 ramifies; for odd d the unit-square class of
 * d in GR(8, f) decides: mod-4 failure ramifies, otherwise the Artin-Schreier
 * trace splits (0) or is inert (1) on top of q.
 *
 * When d = r = 1 mod 4 the quadratic field sits inside Q(theta_r); the report
 * then describes the degree-(r-1) algebra Q(sqrt d) (x) Q(theta_r) and carries
 * a note saying so.
 */
SplittingReport split_2_in_Kplus(long d, long r);

/// r in Q(theta_r): totally ramified, uniformizer pi_r (checked via |Norm(pi_r)| = r).
SplittingReport split_r_in_Qplus(long r);

enum class QuadraticBehaviour { inert, split, not_coprime };

/// r in Q(sqrt d) via the Legendre symbol (d | r).
QuadraticBehaviour check_r_inert_in_quadratic(long d, long r);

/// Legendre symbol (a | p) for an odd prime p, by Euler's criterion.
int legendre(long a, long p);

/// Multiplicative order of 2 in (Z/r)^* / {+1, -1}.
int order_of_two_mod_plus_minus(long r);

std::string to_string(QuadraticBehaviour b);

}  // namespace rrp
