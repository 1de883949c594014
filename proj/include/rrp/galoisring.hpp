#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rrp/bigint.hpp"
#include "rrp/cycfield.hpp"
#include "rrp/ffpoly.hpp"

namespace rrp {

class GaloisRingElem;

/*
 * GR(2^n, f) = (Z/2^n)[t]/(m(t)) with m monic of degree f and irreducible mod 2.
 * This is O/P^n for an unramified prime P of residue degree f above 2, so it
 * models the quotient rings in which the square condition on pi_r is decided.
 * Coefficients live in uint64 words; 1 <= n <= 62.
 */
class GaloisRing {
public:
    GaloisRing(unsigned n, std::vector<Int> modulus);
    /// Modulus = lift of the standard (least) irreducible of degree f.
    static GaloisRing standard(unsigned n, int f);

    unsigned precision() const;
    int degree() const;
    const F2Field& residue_field() const;
    const std::vector<std::uint64_t>& modulus() const;

    GaloisRingElem zero() const;
    GaloisRingElem one() const;
    GaloisRingElem from_int(const Int& value) const;
    GaloisRingElem from_coeffs(const std::vector<Int>& coeffs) const;
    /// Lift with coefficients in {0, 1}.
    GaloisRingElem lift(const F2fElem& residue) const;

    /// Every element, in lexicographic coefficient order (2^{nf} entries; keep small).
    std::vector<GaloisRingElem> elements() const;

private:
    struct Core;
    friend class GaloisRingElem;
    explicit GaloisRing(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
    std::shared_ptr<const Core> core_;
};

class GaloisRingElem {
public:
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    GaloisRing ring() const { return GaloisRing(core_); }

    F2fElem residue() const;
    bool is_unit() const { return !residue().is_zero(); }
    bool is_zero() const;
    /// True iff every coefficient is divisible by 2^k.
    bool divisible_by_two_power(unsigned k) const;
    /// Exact division by 2^k; requires divisible_by_two_power(k). Result is only
    /// meaningful modulo 2^{n-k}.
    GaloisRingElem shift_down(unsigned k) const;

    GaloisRingElem& operator+=(const GaloisRingElem& other);
    GaloisRingElem& operator-=(const GaloisRingElem& other);
    friend GaloisRingElem operator+(GaloisRingElem a, const GaloisRingElem& b) { return a += b; }
    friend GaloisRingElem operator-(GaloisRingElem a, const GaloisRingElem& b) { return a -= b; }
    friend GaloisRingElem operator*(const GaloisRingElem& a, const GaloisRingElem& b);
    GaloisRingElem scaled(std::uint64_t factor) const;

    bool operator==(const GaloisRingElem& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const GaloisRingElem& other) const { return coeffs_ != other.coeffs_; }
    bool operator<(const GaloisRingElem& other) const { return coeffs_ < other.coeffs_; }

    /// Inverse of a unit (Newton iteration from the residue-field inverse).
    GaloisRingElem inverse() const;

private:
    friend class GaloisRing;
    GaloisRingElem(std::shared_ptr<const GaloisRing::Core> core, std::vector<std::uint64_t> coeffs);
    std::shared_ptr<const GaloisRing::Core> core_;
    std::vector<std::uint64_t> coeffs_;
};

/// Where the square-root construction for a unit first gets stuck, if anywhere.
struct UnitSquareClass {
    bool mod4_ok = false;
    /// Trace of the mod-8 Artin-Schreier constant; present iff mod4_ok.
    std::optional<int> mod8_trace;
    bool is_square() const { return mod4_ok && mod8_trace == 0; }
};

/// Obstruction pattern of a unit u in GR(2^n, f), n >= 3.
UnitSquareClass unit_square_class(const GaloisRingElem& u);

/*
 * Square root of a unit in GR(2^n, f), n >= 3:
 *   1. s0 = sqrt of the residue;
 *   2. mod 4: lift(s0)^2 must equal u mod 4;
 *   3. mod 8: c = (u lift(s0)^{-2} - 1)/4 mod 2 needs trace 0, and a root v of
 *      v^2 + v = c corrects the lift to s = lift(s0)(1 + 2v);
 *   4. Hensel: s <- s + 2^{k-1} t with s t = (u - s^2)/2^k mod 2, k = 3..n-1.
 * Throws std::invalid_argument for a non-unit or n < 3.
 */
std::optional<GaloisRingElem> gr_sqrt(const GaloisRingElem& u);

/*
 * Whether the image of u becomes a square after base change to the unramified
 * extension whose residue field has degree `extension_degree` over that of u's
 * ring. The mod-4 test is unchanged and the mod-8 trace is multiplied by the
 * extension degree; beyond mod 8 lifting is unobstructed.
 */
bool is_square_after_unramified_extension(const GaloisRingElem& u, int extension_degree);

/// Image of an element of Z[theta] in GR(2^n, (r-1)/2) with modulus psi_r.
GaloisRing ring_for_inert_two(const RealCyclotomicField& field, unsigned n);
GaloisRingElem to_galois_ring(const GaloisRing& ring, const CycInt& a);

/// Whether pi_r is a square in O/(2)^n for r with 2 inert in Q(theta).
/// Throws std::invalid_argument when 2 is not inert.
bool is_square_pi_r(const RealCyclotomicField& field, unsigned n = 5);

}  // namespace rrp
