#include "rrp/criteria.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "rrp/cycfield.hpp"
#include "rrp/descent.hpp"
#include "rrp/ffpoly.hpp"
#include "rrp/galoisring.hpp"
#include "rrp/splitting.hpp"

namespace rrp {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::undetermined:
            return "undetermined";
    }
    return "undetermined";
}

Status Verdict::overall() const {
    bool undetermined = false;
    for (const auto& c : conditions) {
        if (c.status == Status::fail) {
            return Status::fail;
        }
        undetermined = undetermined || c.status == Status::undetermined;
    }
    return undetermined ? Status::undetermined : Status::pass;
}

const Condition* Verdict::first_blocking() const {
    for (const auto& c : conditions) {
        if (c.status != Status::pass) {
            return &c;
        }
    }
    return nullptr;
}

const Condition* Verdict::find(const std::string& name) const {
    for (const auto& c : conditions) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

Json to_json(const Verdict& v) {
    Json out;
    out["target"] = v.target;
    out["base_d"] = v.base_d;
    out["r"] = v.r;
    out["overall"] = to_string(v.overall());
    Json conditions = Json::array();
    for (const auto& c : v.conditions) {
        Json entry;
        entry["name"] = c.name;
        entry["status"] = to_string(c.status);
        entry["evidence"] = c.evidence;
        conditions.push_back(std::move(entry));
    }
    out["conditions"] = std::move(conditions);
    out["diagnostics"] = v.diagnostics;
    return out;
}

namespace {

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

void require_prime_r(long r) {
    if (r < 5 || !is_prime(r)) {
        throw std::invalid_argument("r must be a prime >= 5, got " + std::to_string(r));
    }
}

void require_base_d(long d) {
    if (d <= 1 || !is_squarefree(d)) {
        throw std::invalid_argument("d must be a squarefree integer > 1, got " + std::to_string(d));
    }
}

Json splitting_json(const SplittingReport& rep) {
    Json primes = Json::array();
    for (const auto& p : rep.primes()) {
        primes.push_back(Json{{"e", p.e}, {"f", p.f}});
    }
    Json out{{"field_degree", rep.field_degree()}, {"primes", std::move(primes)}};
    if (!rep.note().empty()) {
        out["note"] = rep.note();
    }
    return out;
}

Json ddf_json(long r) {
    const RealCyclotomicField field(r);
    Json degrees = Json::array();
    for (const auto& [deg, count] : ddf_degrees(F2Poly::from_ints(field.psi()))) {
        degrees.push_back(Json{{"degree", deg}, {"count", count}});
    }
    return degrees;
}

Condition h_plus_condition(long base_d, long r, const HPlusTable& table) {
    Condition c{"h+ parity", Status::undetermined, Json::object()};
    if (base_d == 0 && r > 200) {
        c.evidence["reason"] = "r outside the Maillet determinant range (r <= 200)";
        return c;
    }
    const HPlusParityOutcome outcome = h_plus_parity(base_d, r, table);
    switch (outcome.status) {
        case ParityStatus::odd:
            c.status = Status::pass;
            c.evidence["parity"] = "odd";
            break;
        case ParityStatus::even:
            c.status = Status::fail;
            c.evidence["parity"] = "even";
            break;
        case ParityStatus::undetermined:
            c.evidence["parity"] = "unknown";
            break;
    }
    c.evidence["source"] = outcome.source;
    if (outcome.h_minus) {
        c.evidence["h_minus"] = outcome.h_minus->get_str();
    }
    if (base_d != 0 && !table.digest().empty()) {
        c.evidence["table_sha256"] = table.digest();
    }
    return c;
}

Json norm_condition_json(const NormCondition& n) {
    Json out{{"case", n.residue_case},
             {"modulus", n.modulus},
             {"target", n.target},
             {"solvable", n.survives},
             {"closed_form_agrees", n.brute_force == n.closed_form}};
    if (n.witness) {
        out["witness"] = Json::array({n.witness->first, n.witness->second});
    }
    return out;
}

}  // namespace

Verdict check_corollary_Q(long r) {
    require_prime_r(r);
    Verdict v{"corollary_Q", 0, r, {}, Json::object()};

    v.conditions.push_back({"r mod 8", from_bool(mod(r, 8) != 1), Json{{"r_mod_8", mod(r, 8)}}});

    const SplittingReport two = split_2_in_Qplus(r);
    Json inert_evidence = splitting_json(two);
    inert_evidence["ddf"] = ddf_json(r);
    inert_evidence["order_of_2_mod_plus_minus"] = order_of_two_mod_plus_minus(r);
    v.conditions.push_back({"2 inert in Q+", from_bool(two.inert()), std::move(inert_evidence)});

    v.conditions.push_back(h_plus_condition(0, r, HPlusTable{}));

    // The corollary's congruence reads r = v^2; the norm of pi_r carries the sign (-1)^((r-1)/2).
    v.diagnostics["norm_pi_r"] = signed_norm_pi_r(r);
    if (two.inert()) {
        v.diagnostics["pi_r_square_mod_2^5"] = is_square_pi_r(RealCyclotomicField(r), 5);
    }
    return v;
}

Verdict check_corollary_quad(long d, long r, const HPlusTable& table) {
    require_base_d(d);
    require_prime_r(r);
    Verdict v{"corollary_quad", d, r, {}, Json::object()};

    v.conditions.push_back({"r does not divide d", from_bool(d % r != 0), Json{{"d_mod_r", mod(d, r)}}});

    const long r8 = mod(r, 8);
    const long d8 = mod(d, 8);
    v.conditions.push_back({"r mod 8", from_bool(r8 != 1 && r8 != d8), Json{{"r_mod_8", r8}, {"d_mod_8", d8}}});

    const SplittingReport two = split_2_in_Kplus(d, r);
    Json unique_evidence = splitting_json(two);
    unique_evidence["over_Q(sqrt d)"] = splitting_json(split_2_in_quadratic(d));
    unique_evidence["over_Q+"] = splitting_json(split_2_in_Qplus(r));
    v.conditions.push_back({"unique prime above 2", from_bool(two.unique()), std::move(unique_evidence)});

    v.conditions.push_back(h_plus_condition(d, r, table));

    const QuadraticBehaviour behaviour = check_r_inert_in_quadratic(d, r);
    Json inertness{{"r_in_Q(sqrt d)", to_string(behaviour)}};
    if (behaviour != QuadraticBehaviour::not_coprime) {
        inertness["legendre"] = legendre(d, r);
    }
    // r not dividing d does not by itself make r inert in Q(sqrt d).
    inertness["diverges_from_r_not_dividing_d"] = behaviour == QuadraticBehaviour::split;
    v.diagnostics["r_inertness"] = std::move(inertness);

    if (d % r != 0 && d8 != 1) {
        v.diagnostics["norm_route"] = norm_condition_json(norm_necessary_condition_detail(d, r));
        v.diagnostics["norm_route_unsigned_r"] = norm_condition_json(norm_residue_system(d, r, r));
    }
    return v;
}

namespace {

Condition main2_condition_iv(long base_d, long r, const SplittingReport& two) {
    Condition c{"(iv) pi_r not a square mod P^(4e+1)", Status::undetermined, Json::object()};
    if (!two.unique() || !two.note().empty()) {
        c.evidence["reason"] = "no unique prime above 2 in K+";
        return c;
    }
    const int e = two.primes()[0].e;
    c.evidence["e"] = e;
    c.evidence["exponent"] = 4 * e + 1;
    bool square = false;
    if (e == 1 && base_d == 0) {
        square = is_square_pi_r(RealCyclotomicField(r), 5);
        c.evidence["route"] = "Galois ring GR(2^5, f)";
    } else if (e == 1 && mod(base_d, 8) == 5) {
        const RealCyclotomicField field(r);
        const GaloisRing ring = ring_for_inert_two(field, 5);
        square = is_square_after_unramified_extension(to_galois_ring(ring, field.pi_r()), 2);
        c.evidence["route"] = "Galois ring GR(2^5, f) extended to residue degree 2f";
    } else if (e == 1) {
        c.evidence["reason"] = "unramified prime above 2 with no exact local model";
        return c;
    } else {
        c.evidence["route"] = "norm to K";
        NormCondition norm;
        try {
            norm = norm_necessary_condition_detail(base_d, r);
        } catch (const std::invalid_argument& err) {
            c.evidence["reason"] = err.what();
            return c;
        }
        c.evidence["norm"] = norm_condition_json(norm);
        if (norm.survives) {
            c.evidence["reason"] = "necessary condition satisfied; squareness not ruled out";
            return c;
        }
        c.status = Status::pass;
        return c;
    }
    c.evidence["square"] = square;
    c.status = from_bool(!square);
    return c;
}

}  // namespace

Verdict check_theorem_main2(long base_d, long r, const HPlusTable& table) {
    if (base_d != 0) {
        require_base_d(base_d);
    }
    require_prime_r(r);
    Verdict v{"theorem_main2", base_d, r, {}, Json::object()};

    if (base_d == 0) {
        v.conditions.push_back({"(i) r inert in K", Status::pass, Json{{"field", "Q"}}});
    } else {
        const QuadraticBehaviour b = check_r_inert_in_quadratic(base_d, r);
        Json ev{{"r_in_Q(sqrt d)", to_string(b)}};
        if (b != QuadraticBehaviour::not_coprime) {
            ev["legendre"] = legendre(base_d, r);
        }
        v.conditions.push_back({"(i) r inert in K", from_bool(b == QuadraticBehaviour::inert), std::move(ev)});
    }

    const SplittingReport two = base_d == 0 ? split_2_in_Qplus(r) : split_2_in_Kplus(base_d, r);
    v.conditions.push_back(
        {"(ii) unique prime above 2", from_bool(two.unique() && two.note().empty()), splitting_json(two)});

    Condition h = h_plus_condition(base_d, r, table);
    h.name = "(iii) h+ parity";
    v.conditions.push_back(std::move(h));

    v.conditions.push_back(main2_condition_iv(base_d, r, two));
    return v;
}

std::vector<Verdict> scan_Q_verdicts(long r_max) {
    if (r_max > 200) {
        throw std::invalid_argument("scan_Q: r_max must be <= 200, got " + std::to_string(r_max));
    }
    std::vector<std::future<Verdict>> pending;
    for (long r = 5; r <= r_max; ++r) {
        if (is_prime(r)) {
            pending.push_back(std::async(std::launch::async, check_corollary_Q, r));
        }
    }
    std::vector<Verdict> out;
    out.reserve(pending.size());
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    std::sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) { return a.r < b.r; });
    return out;
}

std::vector<long> scan_Q(long r_max) {
    std::vector<long> out;
    for (const auto& v : scan_Q_verdicts(r_max)) {
        if (v.overall() == Status::pass) {
            out.push_back(v.r);
        }
    }
    return out;
}

}  // namespace rrp
