#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rrp/cycfield.hpp"
#include "rrp/ffpoly.hpp"
#include "rrp/splitting.hpp"

using rrp::F2Field;
using rrp::F2fElem;
using rrp::F2Poly;

namespace {

// Irreducibility by trial division against every polynomial of degree <= deg/2.
bool irreducible_by_trial_division(std::uint64_t mask) {
    const F2Poly p = F2Poly::from_mask(mask);
    const int n = p.degree();
    if (n < 1) {
        return false;
    }
    for (std::uint64_t q = 2; q < (std::uint64_t{1} << (n / 2 + 1)); ++q) {
        const F2Poly divisor = F2Poly::from_mask(q);
        if (divisor.degree() >= 1 && divisor.degree() <= n / 2 && (p % divisor).is_zero()) {
            return false;
        }
    }
    return true;
}

// Full factorization degrees by repeated trial division (squarefree input).
const std::vector<std::uint64_t>& small_irreducibles() {
    static const std::vector<std::uint64_t> list = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t q = 2; q < (1u << 14); ++q) {
            if (irreducible_by_trial_division(q)) {
                out.push_back(q);
            }
        }
        return out;
    }();
    return list;
}

rrp::DegreeMultiset degrees_by_trial_division(F2Poly p) {
    rrp::DegreeMultiset out;
    for (const std::uint64_t q : small_irreducibles()) {
        if (p.degree() <= 0) {
            break;
        }
        const F2Poly divisor = F2Poly::from_mask(q);
        while ((p % divisor).is_zero()) {
            p = p / divisor;
            ++out[divisor.degree()];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const F2Poly a = F2Poly::from_mask(0b1011);  // x^3 + x + 1
    const F2Poly b = F2Poly::from_mask(0b11);    // x + 1
    CHECK(a.degree() == 3);
    CHECK((a * b).to_string() == "x^4 + x^3 + x^2 + 1");
    const auto [q, r] = (a * b + F2Poly::from_mask(1)).divmod(b);
    CHECK(q == a);
    CHECK(r == F2Poly::from_mask(1));
    CHECK(gcd(a * b, b * b) == b);
    CHECK(a.derivative() == F2Poly::from_mask(0b101));  // 3x^2 + 1 = x^2 + 1
    CHECK(F2Poly{}.degree() == -1);
    CHECK(F2Poly::monomial(70).degree() == 70);
    CHECK(F2Poly::from_ints({rrp::Int(-1), rrp::Int(1), rrp::Int(1)}) == F2Poly::from_mask(0b111));
}

TEST_CASE("large-degree products cross limb boundaries") {
    const F2Poly a = F2Poly::monomial(63) + F2Poly::from_mask(1);
    const F2Poly b = F2Poly::monomial(65) + F2Poly::monomial(2);
    const F2Poly p = a * b;
    CHECK(p.degree() == 128);
    CHECK((p % a).is_zero());
    CHECK(p / a == b);
}

TEST_CASE("is_irreducible agrees with trial division for every polynomial of degree <= 12") {
    for (std::uint64_t mask = 2; mask < (1u << 13); ++mask) {
        CHECK(rrp::is_irreducible(F2Poly::from_mask(mask)) == irreducible_by_trial_division(mask));
    }
}

TEST_CASE("ddf_degrees agrees with trial-division factorization on squarefree polynomials") {
    int tested = 0;
    for (std::uint64_t mask = 2; mask < (1u << 14); mask += 7) {
        const F2Poly p = F2Poly::from_mask(mask);
        if (p.degree() < 1 || gcd(p, p.derivative()).degree() != 0) {
            continue;
        }
        const auto ddf = rrp::ddf_degrees(p);
        CHECK(ddf == degrees_by_trial_division(p));
        int total = 0;
        for (const auto& [deg, count] : ddf) {
            total += deg * count;
        }
        CHECK(total == p.degree());
        ++tested;
    }
    CHECK(tested > 500);
}

TEST_CASE("ddf rejects non-squarefree input") {
    const F2Poly p = F2Poly::from_mask(0b11) * F2Poly::from_mask(0b11);
    CHECK_THROWS_AS(rrp::ddf_degrees(p), std::invalid_argument);
    CHECK_THROWS_AS(rrp::ddf_degrees(F2Poly::from_mask(1)), std::invalid_argument);
}

TEST_CASE("worked DDF values") {
    CHECK(rrp::ddf_degrees(F2Poly::from_mask(0b110)) == rrp::DegreeMultiset{{1, 2}});
    CHECK(rrp::ddf_degrees(F2Poly::from_ints(rrp::RealCyclotomicField(5).psi())) == rrp::DegreeMultiset{{2, 1}});
    CHECK(rrp::ddf_degrees(F2Poly::from_ints(rrp::RealCyclotomicField(31).psi())) == rrp::DegreeMultiset{{5, 3}});
    CHECK(rrp::ddf_degrees(F2Poly::from_ints(rrp::RealCyclotomicField(43).psi())) == rrp::DegreeMultiset{{7, 3}});
}

TEST_CASE("DDF of psi_r mod 2 matches the order of 2 in (Z/r)^*/{+-1} for r <= 150") {
    for (long r = 5; r <= 150; ++r) {
        if (!rrp::is_prime(r)) {
            continue;
        }
        const rrp::RealCyclotomicField field(r);
        const auto ddf = rrp::ddf_degrees(F2Poly::from_ints(field.psi()));
        // Independent order computation: least f with 2^f = +-1 mod r.
        long f = 1;
        long power = 2 % r;
        while (power != 1 && power != r - 1) {
            power = power * 2 % r;
            ++f;
        }
        REQUIRE(ddf.size() == 1);
        CHECK(ddf.begin()->first == f);
        CHECK(ddf.begin()->first * ddf.begin()->second == field.degree());
        CHECK(rrp::order_of_two_mod_plus_minus(r) == f);
    }
}

TEST_CASE("standard moduli are the least irreducibles") {
    CHECK(F2Field::standard(1).modulus() == F2Poly::from_mask(0b10));
    CHECK(F2Field::standard(2).modulus() == F2Poly::from_mask(0b111));
    CHECK(F2Field::standard(3).modulus() == F2Poly::from_mask(0b1011));
    CHECK(F2Field::standard(4).modulus() == F2Poly::from_mask(0b10011));
    CHECK_THROWS(F2Field(F2Poly::from_mask(0b101)));
}

TEST_CASE("field axioms, inverse and Frobenius exhaustively for f <= 8") {
    for (int f = 1; f <= 8; ++f) {
        const F2Field field = F2Field::standard(f);
        const auto elems = rrp::all_elements(field);
        REQUIRE(elems.size() == (std::size_t{1} << f));
        std::set<std::string> squares;
        for (const auto& a : elems) {
            squares.insert(a.square().rep().to_string());
            CHECK(rrp::sqrt_f2f(a).square() == a);
            CHECK(rrp::sqrt_f2f(a.square()) == a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == F2fElem::one(field));
            }
        }
        CHECK(squares.size() == elems.size());  // squaring is a bijection
    }
}

TEST_CASE("trace 0 iff v^2 + v = c is solvable, exhaustively for f <= 8") {
    for (int f = 1; f <= 8; ++f) {
        const F2Field field = F2Field::standard(f);
        const auto elems = rrp::all_elements(field);
        std::set<std::string> image;  // {v^2 + v}
        for (const auto& v : elems) {
            image.insert((v.square() + v).rep().to_string());
        }
        int trace_zero = 0;
        for (const auto& c : elems) {
            const int t = rrp::trace_f2f(c);
            CHECK((t == 0 || t == 1));
            const bool solvable = image.count(c.rep().to_string()) > 0;
            CHECK((t == 0) == solvable);
            const auto root = rrp::solve_artin_schreier(c);
            CHECK(root.has_value() == solvable);
            if (root) {
                CHECK(root->square() + *root == c);
            }
            trace_zero += t == 0;
        }
        CHECK(trace_zero == (1 << (f - 1)));
        CHECK(rrp::trace_f2f(F2fElem::one(field)) == f % 2);
        CHECK(rrp::trace_f2f(F2fElem::zero(field)) == 0);
    }
}

TEST_CASE("F4 worked values") {
    const F2Field f4 = F2Field::standard(2);
    const F2fElem t(f4, F2Poly::from_mask(0b10));
    CHECK(rrp::sqrt_f2f(t) == t.square());
    CHECK(rrp::trace_f2f(F2fElem::one(f4)) == 0);
    const auto root = rrp::solve_artin_schreier(F2fElem::one(f4));
    REQUIRE(root.has_value());
    CHECK((*root == t || *root == t + F2fElem::one(f4)));
}
