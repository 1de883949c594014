#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rrp/criteria.hpp"
#include "rrp/frey.hpp"

namespace rrp {

inline constexpr const char* kToolName = "rrpcheck";
inline constexpr const char* kToolVersion = "1.0.0";

/// {"tool", "version", "command", "input"}; callers append results.
Json report_header(const std::string& command, Json input);

/// Human-readable condition table for a verdict.
std::string render_verdict(const Verdict& v);

/// Primes listed in a whitespace-separated file with `#` comments.
/// Throws std::runtime_error on unreadable files or non-integer tokens.
std::vector<long> read_prime_list(const std::filesystem::path& path);

struct FreyRequest {
    long r = 0;
    Int x;
    Int y;
    std::array<long, 3> k{};
    long smoothness_bound = 100000;
};

/// Default (k1, k2, k3): k1 from find_k1 when 2 is inert, else 0, then the
/// two least remaining indices.
std::array<long, 3> default_frey_indices(const RealCyclotomicField& field, const Int& x, const Int& y);

struct FreyReport {
    Json json;
    /// Set when trial division left an unfactored cofactor.
    bool conductor_incomplete = false;
};

/// Curve, invariants, coprimality and conductor support. Throws
/// std::invalid_argument on bad input and DegenerateCurve when ABC = 0.
FreyReport frey_report(const FreyRequest& req);

std::string render_frey(const Json& frey);

}  // namespace rrp
