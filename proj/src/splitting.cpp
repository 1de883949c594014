#include "rrp/splitting.hpp"

#include <stdexcept>

#include "rrp/ffpoly.hpp"
#include "rrp/galoisring.hpp"

namespace rrp {

SplittingReport::SplittingReport(long rational_prime, int field_degree, std::vector<PrimeAbove> primes, std::string note)
    : rational_prime_(rational_prime), field_degree_(field_degree), primes_(std::move(primes)), note_(std::move(note)) {
    int total = 0;
    for (const auto& p : primes_) {
        total += p.e * p.f;
    }
    if (total != field_degree_ || primes_.empty()) {
        throw std::logic_error("SplittingReport: sum of e*f does not equal the field degree");
    }
}

namespace {

void require_prime_r(long r) {
    if (r < 5 || !is_prime(r)) {
        throw std::invalid_argument("r must be a prime >= 5, got " + std::to_string(r));
    }
}

void require_quadratic_d(long d) {
    if (d <= 1 || !is_squarefree(d)) {
        throw std::invalid_argument("d must be a squarefree integer > 1, got " + std::to_string(d));
    }
}

}  // namespace

SplittingReport split_2_in_Qplus(long r) {
    const RealCyclotomicField field(r);
    const auto degrees = ddf_degrees(F2Poly::from_ints(field.psi()));
    std::vector<PrimeAbove> primes;
    for (const auto& [f, count] : degrees) {
        for (int i = 0; i < count; ++i) {
            primes.push_back({1, f});
        }
    }
    return {2, field.degree(), std::move(primes)};
}

SplittingReport split_2_in_quadratic(long d) {
    require_quadratic_d(d);
    switch (mod(d, 8)) {
        case 1:
            return {2, 2, {{1, 1}, {1, 1}}};
        case 5:
            return {2, 2, {{1, 2}}};
        default:
            return {2, 2, {{2, 1}}};
    }
}

SplittingReport split_2_in_Kplus(long d, long r) {
    require_prime_r(r);
    require_quadratic_d(d);
    const SplittingReport base = split_2_in_Qplus(r);
    std::vector<PrimeAbove> primes;
    for (const auto& q : base.primes()) {
        if (d % 2 == 0) {
            primes.push_back({2, q.f});
            continue;
        }
        const GaloisRing local = GaloisRing::standard(3, q.f);
        const UnitSquareClass cls = unit_square_class(local.from_int(d));
        if (!cls.mod4_ok) {
            primes.push_back({2, q.f});
        } else if (*cls.mod8_trace == 0) {
            primes.push_back({1, q.f});
            primes.push_back({1, q.f});
        } else {
            primes.push_back({1, 2 * q.f});
        }
    }
    std::string note;
    if (d == r && mod(r, 4) == 1) {
        note = "Q(sqrt " + std::to_string(d) + ") is contained in Q(zeta_r + zeta_r^-1); "
               "the compositum degenerates and the report describes the algebra Q(sqrt d) (x) Q(theta)";
    }
    return {2, 2 * base.field_degree(), std::move(primes), std::move(note)};
}

SplittingReport split_r_in_Qplus(long r) {
    const RealCyclotomicField field(r);
    const Int n = field.norm(field.pi_r());
    if (abs(n) != r) {
        throw std::logic_error("split_r_in_Qplus: |Norm(pi_r)| != r");
    }
    return {r, field.degree(), {{field.degree(), 1}}};
}

int legendre(long a, long p) {
    const long residue = powmod(mod(a, p), (p - 1) / 2, p);
    if (residue == 0) {
        return 0;
    }
    return residue == 1 ? 1 : -1;
}

QuadraticBehaviour check_r_inert_in_quadratic(long d, long r) {
    if (!is_prime(r) || r == 2) {
        throw std::invalid_argument("check_r_inert_in_quadratic: r must be an odd prime");
    }
    require_quadratic_d(d);
    const int symbol = legendre(d, r);
    if (symbol == 0) {
        return QuadraticBehaviour::not_coprime;
    }
    return symbol == -1 ? QuadraticBehaviour::inert : QuadraticBehaviour::split;
}

int order_of_two_mod_plus_minus(long r) {
    long x = 2 % r;
    for (int k = 1; k < r; ++k) {
        if (x == 1 || x == r - 1) {
            return k;
        }
        x = (2 * x) % r;
    }
    throw std::logic_error("order_of_two_mod_plus_minus: no order found");
}

std::string to_string(QuadraticBehaviour b) {
    switch (b) {
        case QuadraticBehaviour::inert:
            return "inert";
        case QuadraticBehaviour::split:
            return "split";
        case QuadraticBehaviour::not_coprime:
            return "not coprime";
    }
    return "?";
}

}  // namespace rrp
