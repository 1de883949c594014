// rrpcheck: hypotheses of the asymptotic FLT criteria for signature (r, r, p).
//
// Exit codes: 0 pass, 1 fail, 2 undetermined, 3 usage error, 4 internal error.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rrp/report.hpp"

#ifndef RRP_DATA_DIR
#define RRP_DATA_DIR "data"
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool timing = false;
    long r = 0;
    long d = 0;
    long max_r = 0;
    std::string expect;
    std::string hplus_table = std::string(RRP_DATA_DIR) + "/hplus_table.txt";
    std::string x;
    std::string y;
    std::string k;
    long bound = 100000;
};

int exit_for(rrp::Status s) {
    switch (s) {
        case rrp::Status::pass:
            return kExitPass;
        case rrp::Status::fail:
            return kExitFail;
        case rrp::Status::undetermined:
            return kExitUndetermined;
    }
    return kExitInternal;
}

rrp::Int parse_int(const std::string& text, const char* flag) {
    rrp::Int value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw UsageError(std::string(flag) + " must be an integer, got '" + text + "'");
    }
    return value;
}

void require_prime(long r) {
    if (r < 5 || !rrp::is_prime(r)) {
        throw UsageError("--r must be a prime >= 5, got " + std::to_string(r));
    }
}

rrp::HPlusTable load_table(const std::string& path) {
    try {
        return rrp::HPlusTable::load(path);
    } catch (const std::exception& err) {
        throw UsageError(err.what());
    }
}

class Clock {
public:
    Clock() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const Options& opt, rrp::Json report, const std::string& human, const Clock& clock) {
    if (opt.json) {
        if (opt.timing) {
            report["timing_ms"] = clock.ms();
        }
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << human;
        if (opt.timing) {
            std::cout << "elapsed: " << clock.ms() << " ms\n";
        }
    }
}

rrp::Json table_json(const rrp::HPlusTable& table) {
    return rrp::Json{{"path", table.origin()}, {"entries", table.size()}, {"sha256", table.digest()}};
}

int run_check_q(const Options& opt) {
    const Clock clock;
    require_prime(opt.r);
    const rrp::Verdict v = rrp::check_corollary_Q(opt.r);
    rrp::Json report = rrp::report_header("check_q", rrp::Json{{"r", opt.r}});
    report["verdict"] = rrp::to_json(v);
    emit(opt, std::move(report), rrp::render_verdict(v), clock);
    return exit_for(v.overall());
}

int run_scan_q(const Options& opt) {
    const Clock clock;
    if (opt.max_r > 200) {
        throw UsageError("--max-r must be <= 200, got " + std::to_string(opt.max_r));
    }
    std::vector<long> expected;
    if (!opt.expect.empty()) {
        try {
            expected = rrp::read_prime_list(opt.expect);
        } catch (const std::exception& err) {
            throw UsageError(err.what());
        }
    }
    const std::vector<long> passing = rrp::scan_Q(opt.max_r);

    std::ostringstream human;
    for (std::size_t i = 0; i < passing.size(); ++i) {
        human << (i ? " " : "") << passing[i];
    }
    human << "\n";

    rrp::Json input{{"max_r", opt.max_r}};
    if (!opt.expect.empty()) {
        input["expect"] = opt.expect;
    }
    rrp::Json report = rrp::report_header("scan_q", std::move(input));
    report["passing"] = passing;
    int code = kExitPass;
    if (!opt.expect.empty()) {
        const bool match = expected == passing;
        report["expect_match"] = match;
        if (!match) {
            human << "mismatch with " << opt.expect << "\n";
            code = kExitFail;
        }
    }
    emit(opt, std::move(report), human.str(), clock);
    return code;
}

int run_check_quad(const Options& opt, bool theorem) {
    const Clock clock;
    require_prime(opt.r);
    if (theorem ? (opt.d != 0 && (opt.d <= 1 || !rrp::is_squarefree(opt.d)))
                : (opt.d <= 1 || !rrp::is_squarefree(opt.d))) {
        throw UsageError("--d must be a squarefree integer > 1" + std::string(theorem ? " (or 0 for Q)" : "") +
                         ", got " + std::to_string(opt.d));
    }
    const rrp::HPlusTable table = load_table(opt.hplus_table);
    const rrp::Verdict v =
        theorem ? rrp::check_theorem_main2(opt.d, opt.r, table) : rrp::check_corollary_quad(opt.d, opt.r, table);
    rrp::Json report = rrp::report_header(theorem ? "check_main2" : "check_quad",
                                          rrp::Json{{"d", opt.d}, {"r", opt.r}});
    report["verdict"] = rrp::to_json(v);
    report["hplus_table"] = table_json(table);
    std::string human = rrp::render_verdict(v);
    for (const auto& c : v.conditions) {
        if (c.status == rrp::Status::undetermined && c.evidence.contains("source")) {
            human += c.evidence["source"].get<std::string>() + "\n";
        }
    }
    emit(opt, std::move(report), human, clock);
    return exit_for(v.overall());
}

std::array<long, 3> parse_indices(const std::string& text) {
    std::array<long, 3> k{};
    std::istringstream in(text);
    std::string part;
    int n = 0;
    while (std::getline(in, part, ',')) {
        if (n == 3) {
            throw UsageError("--k takes exactly three indices");
        }
        try {
            std::size_t used = 0;
            k[n] = std::stol(part, &used);
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
        } catch (const std::exception&) {
            throw UsageError("--k: not an integer: '" + part + "'");
        }
        ++n;
    }
    if (n != 3) {
        throw UsageError("--k takes exactly three indices");
    }
    return k;
}

int run_frey(const Options& opt) {
    const Clock clock;
    require_prime(opt.r);
    rrp::FreyRequest req;
    req.r = opt.r;
    req.x = parse_int(opt.x, "--x");
    req.y = parse_int(opt.y, "--y");
    req.smoothness_bound = opt.bound;
    if (rrp::gcd(req.x, req.y) != 1) {
        throw UsageError("--x and --y must be coprime, gcd = " + rrp::gcd(req.x, req.y).get_str());
    }
    req.k = opt.k.empty() ? rrp::default_frey_indices(rrp::RealCyclotomicField(opt.r), req.x, req.y)
                          : parse_indices(opt.k);

    rrp::Json input{{"r", opt.r}, {"x", opt.x}, {"y", opt.y}, {"smoothness_bound", opt.bound}};
    if (!opt.k.empty()) {
        input["k"] = opt.k;
    }
    rrp::Json report = rrp::report_header("frey", std::move(input));
    rrp::FreyReport frey;
    try {
        frey = rrp::frey_report(req);
    } catch (const rrp::DegenerateCurve& err) {
        report["error"] = std::string("degenerate curve: ") + err.what();
        emit(opt, std::move(report), std::string("degenerate curve: ") + err.what() + "\n", clock);
        return kExitFail;
    }
    const std::string human = rrp::render_frey(frey.json);
    report["frey"] = std::move(frey.json);
    emit(opt, std::move(report), human, clock);
    return frey.conductor_incomplete ? kExitUndetermined : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks the hypotheses of asymptotic FLT criteria for x^r + y^r = z^p"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "Emit a JSON report");
        sub->add_flag("--timing", opt.timing, "Include elapsed time in the output");
    };

    auto* check_q = app.add_subcommand("check_q", "Criterion over Q for a single prime r");
    check_q->alias("check-q");
    check_q->add_option("--r", opt.r, "Prime exponent r")->required();
    add_common(check_q);

    auto* scan_q = app.add_subcommand("scan_q", "All primes r <= max-r passing the criterion over Q");
    scan_q->alias("scan-q");
    scan_q->add_option("--max-r", opt.max_r, "Upper bound (<= 200)")->required();
    scan_q->add_option("--expect", opt.expect, "File listing the expected primes");
    add_common(scan_q);

    auto* check_quad = app.add_subcommand("check_quad", "Criterion over Q(sqrt d)");
    check_quad->alias("check-quad");
    check_quad->add_option("--d", opt.d, "Squarefree d > 1")->required();
    check_quad->add_option("--r", opt.r, "Prime exponent r")->required();
    check_quad->add_option("--hplus-table", opt.hplus_table, "h+ parity table")->capture_default_str();
    add_common(check_quad);

    auto* check_main2 = app.add_subcommand("check_main2", "General hypotheses (i)-(iv) over Q (d = 0) or Q(sqrt d)");
    check_main2->alias("check-main2");
    check_main2->add_option("--d", opt.d, "0 for Q, otherwise squarefree d > 1")->capture_default_str();
    check_main2->add_option("--r", opt.r, "Prime exponent r")->required();
    check_main2->add_option("--hplus-table", opt.hplus_table, "h+ parity table")->capture_default_str();
    add_common(check_main2);

    auto* frey = app.add_subcommand("frey", "Frey curve data for a pair (x, y)");
    frey->add_option("--r", opt.r, "Prime exponent r")->required();
    frey->add_option("--x", opt.x, "Integer x")->required();
    frey->add_option("--y", opt.y, "Integer y")->required();
    frey->add_option("--k", opt.k, "Indices K1,K2,K3");
    frey->add_option("--bound", opt.bound, "Trial-division bound for the conductor support")->capture_default_str();
    add_common(frey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check_q) return run_check_q(opt);
        if (*scan_q) return run_scan_q(opt);
        if (*check_quad) return run_check_quad(opt, false);
        if (*check_main2) return run_check_quad(opt, true);
        if (*frey) return run_frey(opt);
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
