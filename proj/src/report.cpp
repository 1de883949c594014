#include "rrp/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "rrp/ffpoly.hpp"

namespace rrp {

Json report_header(const std::string& command, Json input) {
    return Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"input", std::move(input)}};
}

namespace {

std::string evidence_summary(const Json& evidence) {
    if (evidence.contains("reason")) {
        return evidence["reason"].get<std::string>();
    }
    std::string out = evidence.dump();
    if (out.size() > 90) {
        out = out.substr(0, 87) + "...";
    }
    return out;
}

}  // namespace

std::string render_verdict(const Verdict& v) {
    std::ostringstream os;
    os << v.target << "  d=" << v.base_d << "  r=" << v.r << "\n";
    for (const auto& c : v.conditions) {
        os << "  " << std::left << std::setw(38) << c.name << std::setw(14) << to_string(c.status)
           << evidence_summary(c.evidence) << "\n";
    }
    for (const auto& [key, value] : v.diagnostics.items()) {
        os << "  note " << key << ": " << value.dump() << "\n";
    }
    os << "overall: " << to_string(v.overall()) << "\n";
    return os.str();
}

std::vector<long> read_prime_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read list file: " + path.string());
    }
    std::vector<long> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw std::runtime_error(path.string() + ": not an integer: " + token);
            }
            out.push_back(value);
        }
    }
    return out;
}

std::array<long, 3> default_frey_indices(const RealCyclotomicField& field, const Int& x, const Int& y) {
    long k1 = 0;
    const auto degrees = ddf_degrees(F2Poly::from_ints(field.psi()));
    if (degrees.size() == 1 && degrees.begin()->first == field.degree()) {
        if (const auto found = find_k1(field, field.from_int(x), field.from_int(y))) {
            k1 = *found;
        }
    }
    std::array<long, 3> k{k1, 0, 0};
    int filled = 1;
    for (long i = 0; filled < 3; ++i) {
        if (i != k1) {
            k[filled++] = i;
        }
    }
    return k;
}

namespace {

std::string fraction(const CycInt& num, const CycInt& den) { return "(" + to_string(num) + ") / (" + to_string(den) + ")"; }

}  // namespace

FreyReport frey_report(const FreyRequest& req) {
    const RealCyclotomicField field(req.r);
    if (gcd(req.x, req.y) != 1) {
        throw std::invalid_argument("x and y must be coprime, gcd = " + gcd(req.x, req.y).get_str());
    }
    const FreyCurve curve =
        frey_curve(field, field.from_int(req.x), field.from_int(req.y), req.k[0], req.k[1], req.k[2]);
    const FreyInvariants inv = invariants(curve);

    FreyReport out;
    Json& j = out.json;
    j["indices"] = Json::array({req.k[0], req.k[1], req.k[2]});
    j["A"] = to_string(curve.a);
    j["B"] = to_string(curve.b);
    j["C"] = to_string(curve.c);
    j["A+B+C"] = to_string(curve.a + curve.b + curve.c);
    j["discriminant"] = to_string(inv.delta);
    j["c4"] = to_string(inv.c4);
    j["j"] = fraction(inv.j_num, inv.j_den);
    j["norm_ABC"] = field.norm(curve.a * curve.b * curve.c).get_str();

    const CoprimalityReport cop = coprimality_check(field, req.x, req.y);
    Json pairs = Json::array();
    for (const auto& p : cop.pairs) {
        pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"ideal_norm", p.ideal_norm.get_str()}});
    }
    j["coprimality"] = Json{{"coprime_outside_r", cop.coprime_outside_r}, {"pairs", std::move(pairs)}};

    Json conductor{{"smoothness_bound", req.smoothness_bound}};
    try {
        Json support = Json::array();
        for (const auto& [q, v] : conductor_support_outside_S(curve, req.smoothness_bound)) {
            support.push_back(Json{{"q", q.get_str()}, {"norm_valuation", v}});
        }
        conductor["primes"] = std::move(support);
    } catch (const UnfactoredCofactor& err) {
        conductor["unfactored_cofactor"] = err.cofactor().get_str();
        out.conductor_incomplete = true;
    }
    j["conductor_support_outside_2r"] = std::move(conductor);
    return out;
}

std::string render_frey(const Json& frey) {
    std::ostringstream os;
    const auto& k = frey["indices"];
    os << "indices       (" << k[0] << ", " << k[1] << ", " << k[2] << ")\n";
    for (const char* key : {"A", "B", "C", "A+B+C", "discriminant", "c4", "j", "norm_ABC"}) {
        os << std::left << std::setw(14) << key << frey[key].get<std::string>() << "\n";
    }
    const auto& cop = frey["coprimality"];
    os << "coprime outside r: " << (cop["coprime_outside_r"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& p : cop["pairs"]) {
        os << "  (f_" << p["i"] << ", f_" << p["j"] << ") norm " << p["ideal_norm"].get<std::string>() << "\n";
    }
    const auto& cond = frey["conductor_support_outside_2r"];
    os << "conductor support outside {2, r} (bound " << cond["smoothness_bound"] << "):";
    if (cond.contains("primes")) {
        for (const auto& p : cond["primes"]) {
            os << " " << p["q"].get<std::string>() << "^" << p["norm_valuation"];
        }
    } else {
        os << " unfactored cofactor " << cond["unfactored_cofactor"].get<std::string>();
    }
    os << "\n";
    return os.str();
}

}  // namespace rrp
