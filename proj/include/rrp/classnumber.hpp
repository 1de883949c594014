#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rrp/bigint.hpp"

namespace rrp {

enum class Parity { odd, even };

std::string to_string(Parity p);

struct HMinusResult {
    long r = 0;
    Int h_minus;
    Parity parity = Parity::odd;
    Int determinant;
    long scaling_exponent = 0;  // (r-3)/2
};

/*
 * Relative class number of Q(zeta_r) from the Maillet determinant
 *   det[ R(a * b^{-1} mod r) ]_{1 <= a, b <= (r-1)/2} = +- r^{(r-3)/2} h^-,
 * R the least positive residue. The determinant is evaluated by Bareiss
 * elimination; an inexact division by r^{(r-3)/2} throws std::logic_error.
 * Accepts primes 5 <= r <= 200.
 */
HMinusResult maillet_h_minus(long r);

struct HPlusTableEntry {
    long base_d = 0;
    long r = 0;
    Parity parity = Parity::odd;
    std::string source;
};

/// Attested parities of narrow class numbers for quadratic-base composita.
/// Text format, one entry per line: `d r parity source...`; `#` starts a comment.
class HPlusTable {
public:
    HPlusTable() = default;
    static HPlusTable parse(const std::string& text, std::string origin = "<memory>");
    static HPlusTable load(const std::filesystem::path& path);

    const HPlusTableEntry* find(long base_d, long r) const;
    std::size_t size() const { return entries_.size(); }
    const std::string& origin() const { return origin_; }
    /// SHA-256 of the raw table text (hex), empty for an empty table.
    const std::string& digest() const { return digest_; }

private:
    std::map<std::pair<long, long>, HPlusTableEntry> entries_;
    std::string origin_;
    std::string digest_;
};

enum class ParityStatus { odd, even, undetermined };

struct HPlusParityOutcome {
    ParityStatus status = ParityStatus::undetermined;
    std::string source;
    std::optional<Int> h_minus;  // set on the K = Q route
};

/*
 * Parity of the narrow class number of K+ = K(theta_r).
 * base_d = 0 (K = Q): odd iff h_r^- is odd, since h+ of Q(theta) divides
 * h(Q(zeta_r)) and the latter is odd iff h^- is odd.
 * base_d != 0: table lookup; a missing entry is undetermined.
 */
HPlusParityOutcome h_plus_parity(long base_d, long r, const HPlusTable& table);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace rrp
