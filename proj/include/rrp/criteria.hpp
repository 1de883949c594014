#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rrp/classnumber.hpp"

namespace rrp {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, undetermined };

std::string to_string(Status s);

struct Condition {
    std::string name;
    Status status = Status::undetermined;
    Json evidence = Json::object();
};

struct Verdict {
    std::string target;  // "corollary_Q", "corollary_quad", "theorem_main2"
    long base_d = 0;     // 0 for K = Q
    long r = 0;
    std::vector<Condition> conditions;
    /// Recorded facts that do not gate the verdict.
    Json diagnostics = Json::object();

    /// Any fail -> fail; otherwise any undetermined -> undetermined; otherwise pass.
    Status overall() const;
    /// First condition that is not pass, or nullptr.
    const Condition* first_blocking() const;
    const Condition* find(const std::string& name) const;
};

Json to_json(const Verdict& v);

/*
 * K = Q: "r mod 8" (r != 1 mod 8), "2 inert in Q+" and "h+ parity" (h^- odd).
 * The exact squareness of pi_r mod 2^5 is kept as a diagnostic when 2 is inert.
 */
Verdict check_corollary_Q(long r);

/*
 * K = Q(sqrt d): "r does not divide d", "r mod 8" (r != 1, d mod 8),
 * "unique prime above 2" in K+ and "h+ parity" from the table. Diagnostics
 * carry the Legendre inertness of r in K and the norm-route residue system.
 */
Verdict check_corollary_quad(long d, long r, const HPlusTable& table);

/*
 * Hypotheses (i)-(iv) of the general criterion over K = Q (base_d = 0) or
 * K = Q(sqrt d). (iv) is decided exactly in Galois rings when the prime above
 * 2 is unramified over Q; in the ramified case only the norm-level necessary
 * condition is available, and surviving it leaves (iv) undetermined.
 */
Verdict check_theorem_main2(long base_d, long r, const HPlusTable& table);

/// Corollary verdicts for every prime 5 <= r <= r_max, in increasing r.
/// Evaluated concurrently. r_max > 200 throws std::invalid_argument.
std::vector<Verdict> scan_Q_verdicts(long r_max);

/// Primes 5 <= r <= r_max passing check_corollary_Q.
std::vector<long> scan_Q(long r_max);

}  // namespace rrp
