#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rrp/cycfield.hpp"

using rrp::CycInt;
using rrp::Int;
using rrp::RealCyclotomicField;

namespace {

const long kPrimes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

long double embed(const CycInt& a, long k) {
    const long double theta = 2.0L * std::cos(2.0L * 3.14159265358979323846264338327950288L * k / a.r());
    long double value = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        value = value * theta + a[i].get_d();
    }
    return value;
}

CycInt random_element(const RealCyclotomicField& field, long bound) {
    std::vector<Int> c(field.degree());
    for (auto& v : c) {
        v = oracle::uniform(-bound, bound);
    }
    return field.from_coeffs(c);
}

}  // namespace

TEST_CASE("psi_r matches the product of (t - 2cos(2 pi k / r))") {
    for (long r : kPrimes) {
        const RealCyclotomicField field(r);
        const auto numeric = oracle::psi_numeric(r);
        REQUIRE(field.psi().size() == numeric.size());
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            CHECK(field.psi()[i] == numeric[i]);
        }
    }
}

TEST_CASE("folding: x^d psi_r(x + 1/x) equals the r-th cyclotomic polynomial") {
    // Expand sum_i psi_i x^{d-i} (x^2 + 1)^i and compare with 1 + x + ... + x^{r-1}.
    for (long r = 5; r <= 150; ++r) {
        if (!rrp::is_prime(r)) {
            continue;
        }
        const RealCyclotomicField field(r);
        const long d = field.degree();
        CHECK(static_cast<long>(field.psi().size()) == d + 1);
        CHECK(field.psi().back() == 1);
        std::vector<Int> folded(r, 0);
        std::vector<Int> binom{1};  // (x^2 + 1)^i coefficients in x^2
        for (long i = 0; i <= d; ++i) {
            for (std::size_t j = 0; j < binom.size(); ++j) {
                folded[d - i + 2 * j] += field.psi()[i] * binom[j];
            }
            std::vector<Int> next(binom.size() + 1, 0);
            for (std::size_t j = 0; j < binom.size(); ++j) {
                next[j] += binom[j];
                next[j + 1] += binom[j];
            }
            binom = std::move(next);
        }
        bool all_ones = true;
        for (const auto& c : folded) {
            all_ones = all_ones && c == 1;
        }
        CHECK_MESSAGE(all_ones, "r = " << r);
        CHECK(rrp::mod(field.psi_discriminant(), Int(2)) == 1);
    }
}

TEST_CASE("product-to-sum identity for theta power sums") {
    for (long r : {5L, 7L, 11L, 13L}) {
        const RealCyclotomicField field(r);
        for (long k = 0; k < r; ++k) {
            for (long j = 0; j <= k; ++j) {
                const long plus = (k + j) % r;
                CHECK(field.theta_power_sum(k) * field.theta_power_sum(j) ==
                      field.theta_power_sum(plus) + field.theta_power_sum(k - j));
            }
        }
    }
}

TEST_CASE("small minimal polynomials") {
    CHECK(RealCyclotomicField(5).psi() == rrp::IntPoly{-1, 1, 1});
    CHECK(RealCyclotomicField(7).psi() == rrp::IntPoly{-1, -2, 1, 1});
    CHECK(RealCyclotomicField(11).psi() == rrp::IntPoly{1, 3, -3, -4, 1, 1});
}

TEST_CASE("field construction rejects bad r") {
    CHECK_THROWS_AS(RealCyclotomicField(3), std::invalid_argument);
    CHECK_THROWS_AS(RealCyclotomicField(9), std::invalid_argument);
    CHECK_THROWS_AS(RealCyclotomicField(1), std::invalid_argument);
}

TEST_CASE("theta power sums agree with the embeddings 2cos(2 pi j k / r)") {
    for (long r : {5L, 7L, 13L, 29L}) {
        const RealCyclotomicField field(r);
        for (long k = 0; k <= field.degree(); ++k) {
            const CycInt s = field.theta_power_sum(k);
            for (long j = 1; j <= field.degree(); ++j) {
                const long double expected =
                    2.0L * std::cos(2.0L * 3.14159265358979323846264338327950288L * j * k / r);
                CHECK(std::fabs(embed(s, j) - expected) < 1e-9L);
            }
        }
        for (long k = 1; k < r; ++k) {
            CHECK(field.theta_power_sum(k) == field.theta_power_sum(r - k));
        }
        CHECK_THROWS_AS(field.theta_power_sum(r), std::out_of_range);
        CHECK_THROWS_AS(field.theta_power_sum(-1), std::out_of_range);
    }
}

TEST_CASE("ring operations are compatible with every real embedding") {
    for (long r : {7L, 11L, 17L}) {
        const RealCyclotomicField field(r);
        for (int trial = 0; trial < 20; ++trial) {
            const CycInt a = random_element(field, 9);
            const CycInt b = random_element(field, 9);
            const CycInt prod = a * b;
            const CycInt sum = a - b;
            for (long j = 1; j <= field.degree(); ++j) {
                const long double pa = embed(a, j);
                const long double pb = embed(b, j);
                CHECK(std::fabs(embed(prod, j) - pa * pb) < 1e-6L * (1 + std::fabs(pa * pb)));
                CHECK(std::fabs(embed(sum, j) - (pa - pb)) < 1e-9L);
            }
        }
    }
}

TEST_CASE("norm agrees with the resultant oracle and the embedding product") {
    for (long r : {5L, 7L, 11L, 13L, 23L}) {
        const RealCyclotomicField field(r);
        for (int trial = 0; trial < 15; ++trial) {
            const CycInt a = random_element(field, 5);
            CHECK(field.norm(a) == oracle::norm_by_resultant(field.psi(), a.coeffs()));
            if (r <= 13 && !a.is_zero()) {
                long double product = 1;
                for (long j = 1; j <= field.degree(); ++j) {
                    product *= embed(a, j);
                }
                CHECK(std::fabs(product - field.norm(a).get_d()) < 1e-6L * (1 + std::fabs(product)));
            }
        }
        CHECK(field.norm(field.one()) == 1);
        CHECK(field.norm(field.from_int(2)) == rrp::pow(Int(2), field.degree()));
    }
}

TEST_CASE("norm is multiplicative on 200 random pairs") {
    for (int trial = 0; trial < 200; ++trial) {
        const RealCyclotomicField field(kPrimes[trial % 8]);
        const CycInt a = random_element(field, 10);
        const CycInt b = random_element(field, 10);
        CHECK(field.norm(a * b) == field.norm(a) * field.norm(b));
    }
}

TEST_CASE("ring axioms on random elements") {
    const RealCyclotomicField field(13);
    for (int trial = 0; trial < 50; ++trial) {
        const CycInt a = random_element(field, 10);
        const CycInt b = random_element(field, 10);
        const CycInt c = random_element(field, 10);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(static_cast<long>(a.coeffs().size()) == field.degree());
    }
}

TEST_CASE("pi_r has norm +-r and theta - 2 form") {
    for (long r : kPrimes) {
        const RealCyclotomicField field(r);
        const Int n = field.norm(field.pi_r());
        CHECK(abs(n) == r);
        CHECK(n == ((r % 4 == 1) ? Int(r) : Int(-r)));
        CHECK(field.pi_r() == field.theta() - field.from_int(2));
    }
}

TEST_CASE("discriminant of psi_r is r^((r-3)/2)") {
    for (long r : {5L, 7L, 11L, 13L, 17L}) {
        CHECK(RealCyclotomicField(r).psi_discriminant() == rrp::pow(Int(r), (r - 3) / 2));
    }
}

TEST_CASE("f_0 f_1 ... f_d factor (x + y) phi_r(x, y)") {
    for (long r : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        const RealCyclotomicField field(r);
        for (int trial = 0; trial < 100; ++trial) {
            const Int x = oracle::uniform(-30, 30);
            const Int y = oracle::uniform(-30, 30);
            const CycInt fx = field.from_int(x);
            const CycInt fy = field.from_int(y);
            CycInt product = field.one();
            for (long k = 1; k <= field.degree(); ++k) {
                product *= rrp::f_k_eval(k, fx, fy);
            }
            const CycInt phi = rrp::phi_r_eval(fx, fy);
            CHECK(product == phi);
            // phi_r(x, y) (x + y) = x^r + y^r
            CHECK(phi * (x + y) == field.from_int(rrp::pow(x, r) + rrp::pow(y, r)));
            CHECK(rrp::f_k_eval(0, fx, fy) == field.from_int((x + y) * (x + y)));
        }
    }
}

TEST_CASE("worked values") {
    const RealCyclotomicField f5(5);
    const CycInt one = f5.one();
    CHECK(rrp::f_k_eval(0, one, one) == f5.from_int(4));
    CHECK(rrp::phi_r_eval(f5.from_int(2), one) == f5.from_int(11));
    CHECK(rrp::phi_r_eval(one, one) == one);
    CHECK(rrp::phi_r_eval(one, f5.zero()) == one);
    CycInt product = f5.one();
    for (long k = 0; k <= 2; ++k) {
        product *= rrp::f_k_eval(k, f5.from_int(2), one);
        CHECK(rrp::f_k_eval(k, one, f5.zero()) == one);
    }
    CHECK(product == f5.from_int(99));
    CHECK(f5.theta_power_sum(0) == f5.from_int(2));
    CHECK(f5.theta_power_sum(2) == f5.from_coeffs({Int(-1), Int(-1)}));
    CHECK(rrp::reduce_mod(f5.pi_r(), 4) == std::vector<Int>{2, 1});
    CHECK(rrp::reduce_mod(rrp::pow(f5.theta(), 2), 3) == std::vector<Int>{1, 2});

    const RealCyclotomicField f7(7);
    const CycInt t = f7.theta();
    CHECK(f7.theta_power_sum(3) == t * t * t - f7.from_int(3) * t);
    const auto [alpha, beta, gamma] = rrp::alpha_beta_gamma(f7, 1, 2, 3);
    const CycInt x = f7.from_int(3);
    const CycInt y = f7.from_int(2);
    CHECK((alpha * rrp::f_k_eval(1, x, y) + beta * rrp::f_k_eval(2, x, y) + gamma * rrp::f_k_eval(3, x, y)).is_zero());
}

TEST_CASE("f_k index range") {
    const RealCyclotomicField field(7);
    CHECK_THROWS(rrp::f_k_eval(4, field.one(), field.one()));
    CHECK_THROWS(rrp::f_k_eval(-1, field.one(), field.one()));
}

TEST_CASE("alpha f_k1 + beta f_k2 + gamma f_k3 = 0 symbolically") {
    // Over Z[theta][x, y]: compare the coefficients of x^2, xy, y^2.
    for (long r : {5L, 7L, 11L, 13L}) {
        const RealCyclotomicField field(r);
        const long d = field.degree();
        for (long k1 = 0; k1 <= d; ++k1) {
            for (long k2 = 0; k2 <= d; ++k2) {
                for (long k3 = 0; k3 <= d; ++k3) {
                    if (k1 == k2 || k2 == k3 || k1 == k3) {
                        continue;
                    }
                    const auto [alpha, beta, gamma] = rrp::alpha_beta_gamma(field, k1, k2, k3);
                    CHECK((alpha + beta + gamma).is_zero());
                    const CycInt mid = alpha * field.theta_power_sum(k1) + beta * field.theta_power_sum(k2) +
                                       gamma * field.theta_power_sum(k3);
                    CHECK(mid.is_zero());
                }
            }
        }
        CHECK_THROWS_AS(rrp::alpha_beta_gamma(field, 0, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(rrp::alpha_beta_gamma(field, 0, 1, d + 1), std::out_of_range);
    }
}

TEST_CASE("alpha, beta, gamma are units times powers of pi_r") {
    // |Norm| of each coefficient is a power of r.
    for (long r : {5L, 7L, 11L, 13L}) {
        const RealCyclotomicField field(r);
        const auto [alpha, beta, gamma] = rrp::alpha_beta_gamma(field, 0, 1, 2);
        for (const CycInt* c : {&alpha, &beta, &gamma}) {
            Int n = abs(field.norm(*c));
            while (n % r == 0) {
                n /= r;
            }
            CHECK(n == 1);
        }
    }
}

TEST_CASE("reduce_mod and to_string") {
    const RealCyclotomicField field(5);
    const CycInt a = field.from_coeffs({Int(-3), Int(7)});
    CHECK(rrp::reduce_mod(a, 4) == std::vector<Int>{1, 3});
    CHECK(rrp::to_string(a) == "-3 + 7*theta");
    CHECK(rrp::to_string(field.zero()) == "0");
    // theta^2 = 1 - theta for r = 5
    CHECK(rrp::pow(field.theta(), 2) == field.from_coeffs({Int(1), Int(-1)}));
}

TEST_CASE("mixing fields throws") {
    const RealCyclotomicField f5(5);
    const RealCyclotomicField f7(7);
    CHECK_THROWS(f5.theta() + f7.theta());
}
