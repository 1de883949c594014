#include "rrp/frey.hpp"

#include <string>

#include "rrp/ffpoly.hpp"
#include "rrp/matrix.hpp"

namespace rrp {

FreyCurve frey_curve(const RealCyclotomicField& field, const CycInt& x, const CycInt& y, long k1, long k2, long k3) {
    if (x.is_zero() && y.is_zero()) {
        throw std::invalid_argument("frey_curve: x and y are both zero");
    }
    const auto [alpha, beta, gamma] = alpha_beta_gamma(field, k1, k2, k3);
    FreyCurve curve{field,
                    std::array<long, 3>{k1, k2, k3},
                    x,
                    y,
                    alpha * f_k_eval(k1, x, y),
                    beta * f_k_eval(k2, x, y),
                    gamma * f_k_eval(k3, x, y)};
    if (!(curve.a + curve.b + curve.c).is_zero()) {
        throw std::logic_error("frey_curve: A + B + C != 0");
    }
    return curve;
}

FreyCurve frey_curve_from_ab(const CycInt& a, const CycInt& b) {
    return FreyCurve{a.field(), std::nullopt, std::nullopt, std::nullopt, a, b, -(a + b)};
}

FreyInvariants invariants(const FreyCurve& curve) {
    const CycInt& a = curve.a;
    const CycInt& b = curve.b;
    const CycInt& c = curve.c;
    const CycInt abc = a * b * c;
    if (abc.is_zero()) {
        throw DegenerateCurve("Frey curve is singular: ABC = 0");
    }
    const CycInt s = a * b + b * c + c * a;
    const CycInt abc_sq = abc * abc;
    return FreyInvariants{
        abc_sq * Int(16),
        s * Int(-16),
        s * s * s * Int(-256),
        abc_sq,
    };
}

namespace {

// Newton lift of a simple root of psi modulo q^precision.
Int lift_root(const IntPoly& psi, long q, long root, unsigned precision) {
    const IntPoly dpsi = poly_derivative(psi);
    Int rho = root;
    unsigned reached = 1;
    while (reached < precision) {
        reached = std::min(2 * reached, precision);
        const Int modulus = pow(Int(q), reached);
        const Int value = mod(poly_eval(psi, rho), modulus);
        Int inv;
        const Int deriv = mod(poly_eval(dpsi, rho), modulus);
        if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t()) == 0) {
            throw std::invalid_argument("root is not simple modulo q");
        }
        rho = mod(rho - value * inv, modulus);
    }
    return rho;
}

}  // namespace

std::vector<long> simple_roots_mod(const RealCyclotomicField& field, long q) {
    std::vector<long> roots;
    const IntPoly dpsi = poly_derivative(field.psi());
    for (long t = 0; t < q; ++t) {
        if (mod(poly_eval(field.psi(), t), Int(q)) == 0 && mod(poly_eval(dpsi, t), Int(q)) != 0) {
            roots.push_back(t);
        }
    }
    return roots;
}

long valuation_at_split_prime(const CycInt& a, long q, long root) {
    if (q == 2 || !is_prime(q) || q == a.r()) {
        throw std::invalid_argument("valuation_at_split_prime: q must be an odd prime different from r");
    }
    if (a.is_zero()) {
        throw std::invalid_argument("valuation_at_split_prime: valuation of zero");
    }
    const auto& psi = a.field().psi();
    if (mod(poly_eval(psi, root), Int(q)) != 0 || mod(poly_eval(poly_derivative(psi), root), Int(q)) == 0) {
        throw std::invalid_argument("valuation_at_split_prime: " + std::to_string(root) +
                                    " is not a simple root of psi_r mod " + std::to_string(q));
    }
    for (unsigned precision = 8;; precision *= 2) {
        const Int modulus = pow(Int(q), precision);
        const Int rho = lift_root(psi, q, root, precision);
        const Int value = mod(poly_eval(a.coeffs(), rho), modulus);
        if (value != 0) {
            return static_cast<long>(rrp::valuation(value, static_cast<unsigned long>(q)));
        }
    }
}

long valuation(const CycInt& a, const DesignatedPrime& prime) {
    if (prime.kind == DesignatedPrime::Kind::split_odd) {
        return valuation_at_split_prime(a, prime.q, prime.root);
    }
    if (a.is_zero()) {
        throw std::invalid_argument("valuation: valuation of zero");
    }
    const auto degrees = ddf_degrees(F2Poly::from_ints(a.field().psi()));
    if (degrees.size() != 1 || degrees.begin()->first != a.field().degree()) {
        throw std::invalid_argument("valuation: 2 is not inert in Q(theta) for r = " + std::to_string(a.r()));
    }
    long best = -1;
    for (const auto& c : a.coeffs()) {
        if (c == 0) {
            continue;
        }
        const long v = static_cast<long>(rrp::valuation(c, 2));
        if (best < 0 || v < best) {
            best = v;
        }
    }
    return best;
}

namespace {

Int ideal_norm_of_pair(const CycInt& g1, const CycInt& g2) {
    const auto field = g1.field();
    const int d = field.degree();
    Matrix<Int> gens(2 * d, d);
    CycInt u = g1;
    CycInt v = g2;
    const CycInt theta = field.theta();
    for (int k = 0; k < d; ++k) {
        for (int j = 0; j < d; ++j) {
            gens(k, j) = u[j];
            gens(d + k, j) = v[j];
        }
        u *= theta;
        v *= theta;
    }
    return lattice_index(std::move(gens));
}

bool is_power_of(Int n, long r) {
    if (n <= 0) {
        return false;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(r)) != 0) {
        n /= r;
    }
    return n == 1;
}

}  // namespace

CoprimalityReport coprimality_check(const RealCyclotomicField& field, const Int& x, const Int& y) {
    if (gcd(x, y) != 1) {
        throw std::invalid_argument("coprimality_check: gcd(x, y) must be 1");
    }
    const long d = field.degree();
    std::vector<CycInt> forms;
    for (long k = 0; k <= d; ++k) {
        forms.push_back(f_k_eval(k, field.from_int(x), field.from_int(y)));
    }
    CoprimalityReport report;
    for (long i = 0; i <= d; ++i) {
        for (long j = i + 1; j <= d; ++j) {
            PairIndex entry{i, j, ideal_norm_of_pair(forms[i], forms[j])};
            if (!is_power_of(entry.ideal_norm, field.r()) && !report.offending) {
                report.coprime_outside_r = false;
                report.offending = entry;
            }
            report.pairs.push_back(std::move(entry));
        }
    }
    return report;
}

std::map<Int, unsigned> conductor_support_outside_S(const FreyCurve& curve, long smoothness_bound) {
    const auto& field = curve.field;
    Int n = abs(field.norm(curve.a) * field.norm(curve.b) * field.norm(curve.c));
    if (n == 0) {
        throw DegenerateCurve("conductor_support_outside_S: ABC = 0");
    }
    for (const long p : {2L, field.r()}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
            n /= p;
        }
    }
    std::map<Int, unsigned> support;
    for (long p = 3; p <= smoothness_bound && n > 1; p += 2) {
        if (p == field.r() || !is_prime(p)) {
            continue;
        }
        unsigned v = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
            n /= p;
            ++v;
        }
        if (v > 0) {
            support.emplace(Int(p), v);
        }
    }
    if (n > 1) {
        throw UnfactoredCofactor("conductor_support_outside_S: unfactored cofactor " + n.get_str() +
                                     " above smoothness bound " + std::to_string(smoothness_bound),
                                 n);
    }
    return support;
}

bool j_valuation_identity_check(const FreyCurve& curve, const DesignatedPrime& prime) {
    if (curve.b.is_zero() || curve.c.is_zero() || curve.a.is_zero()) {
        throw DegenerateCurve("j_valuation_identity_check: ABC = 0");
    }
    const long va = valuation(curve.a, prime);
    const long vb = valuation(curve.b, prime);
    const long vc = valuation(curve.c, prime);
    if (va == 0 || vb != 0 || vc != 0) {
        throw std::invalid_argument("j_valuation_identity_check: the prime must divide A and not BC");
    }
    const FreyInvariants inv = invariants(curve);
    const long v_j = valuation(inv.j_num, prime) - valuation(inv.j_den, prime);
    const long v_two = valuation(curve.field.from_int(2), prime);
    return v_j == 8 * v_two - 2 * va;
}

std::optional<long> find_k1(const RealCyclotomicField& field, const CycInt& x, const CycInt& y) {
    const auto degrees = ddf_degrees(F2Poly::from_ints(field.psi()));
    if (degrees.size() != 1 || degrees.begin()->first != field.degree()) {
        throw std::invalid_argument("find_k1: 2 is not inert in Q(theta)");
    }
    for (long k = 0; k <= field.degree(); ++k) {
        const CycInt value = f_k_eval(k, x, y);
        bool even = true;
        for (const auto& c : value.coeffs()) {
            if (mpz_odd_p(c.get_mpz_t()) != 0) {
                even = false;
                break;
            }
        }
        if (even) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace rrp
