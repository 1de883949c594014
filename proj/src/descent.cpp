#include "rrp/descent.hpp"

#include <vector>

#include "rrp/matrix.hpp"

namespace rrp {

KElem::KElem(CycInt num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("KElem: zero denominator");
    }
    normalize();
}

void KElem::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = den_;
    for (const auto& c : num_.coeffs()) {
        g = gcd(g, c);
    }
    if (g != 1) {
        std::vector<Int> coeffs = num_.coeffs();
        for (auto& c : coeffs) {
            c /= g;
        }
        num_ = num_.field().from_coeffs(std::move(coeffs));
        den_ /= g;
    }
}

KElem& KElem::operator+=(const KElem& other) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

KElem& KElem::operator-=(const KElem& other) { return *this += -other; }

KElem& KElem::operator*=(const KElem& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

KElem& KElem::operator/=(const KElem& other) { return *this *= other.inverse(); }

KElem KElem::inverse() const {
    if (is_zero()) {
        throw std::domain_error("KElem: zero has no inverse");
    }
    // Solve b * num = 1: with rows theta^i * num of the multiplication matrix M,
    // the coordinates of b satisfy M^T b = e_0. Gaussian elimination over Q.
    const auto field = num_.field();
    const int d = field.degree();
    Matrix<Rational> system(d, d + 1);
    CycInt row = num_;
    const CycInt theta = field.theta();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            system(j, i) = Rational(row[j]);
        }
        row *= theta;
    }
    system(0, d) = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        while (pivot < d && system(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == d) {
            throw std::logic_error("KElem::inverse: singular multiplication matrix");
        }
        system.swap_rows(col, pivot);
        const Rational lead = system(col, col);
        for (int j = col; j <= d; ++j) {
            system(col, j) /= lead;
        }
        for (int i = 0; i < d; ++i) {
            if (i == col || system(i, col) == 0) {
                continue;
            }
            const Rational factor = system(i, col);
            for (int j = col; j <= d; ++j) {
                system(i, j) -= factor * system(col, j);
            }
        }
    }
    Int common = 1;
    for (int i = 0; i < d; ++i) {
        Int l;
        mpz_lcm(l.get_mpz_t(), common.get_mpz_t(), system(i, d).get_den_mpz_t());
        common = l;
    }
    std::vector<Int> coeffs(d);
    for (int i = 0; i < d; ++i) {
        coeffs[i] = Rational(system(i, d) * common).get_num();
    }
    // (num/den)^{-1} = den * b.
    return KElem(field.from_coeffs(std::move(coeffs)) * den_, common);
}

bool pi_plus_four_identity(const RealCyclotomicField& field) {
    const CycInt middle = field.theta_power_sum(field.degree());
    return middle * middle == field.pi_r() + field.from_int(4);
}

namespace {

bool in_odd_square_class_mod_32(long r) {
    for (long v = 0; v < 32; ++v) {
        if ((v * v) % 32 == mod(r, 32)) {
            return true;
        }
    }
    return false;
}

}  // namespace

long signed_norm_pi_r(long r) { return mod(r, 4) == 1 ? r : -r; }

NormCondition norm_residue_system(long base_d, long r, long target) {
    if (r < 5 || !is_prime(r)) {
        throw std::invalid_argument("norm_necessary_condition: r must be a prime >= 5");
    }
    NormCondition out;
    out.target = target;
    if (base_d == 0) {
        out.residue_case = "Q";
        out.modulus = 32;
        for (long v = 0; v < 32; ++v) {
            if ((v * v) % 32 == mod(target, 32)) {
                out.brute_force = true;
                out.witness = std::make_pair(v, 0L);
                break;
            }
        }
        out.closed_form = mod(target, 8) == 1;
    } else {
        if (base_d <= 1 || !is_squarefree(base_d)) {
            throw std::invalid_argument("norm_necessary_condition: d must be squarefree > 1");
        }
        if (base_d % r == 0) {
            throw std::invalid_argument("norm_necessary_condition: r divides d");
        }
        const long d8 = mod(base_d, 8);
        if (d8 == 1) {
            throw std::invalid_argument("norm_necessary_condition: 2 splits in Q(sqrt d) for d = 1 mod 8");
        }
        if (d8 == 5) {
            out.residue_case = "d = 5 mod 8";
            out.modulus = 32;
            const long m = 32;
            const long quarter = mod((base_d - 1) / 4, m);
            for (long a = 0; a < m && !out.brute_force; ++a) {
                for (long b = 0; b < m; ++b) {
                    const bool second = mod(b * b + 2 * a * b, m) == 0;
                    const bool first = mod(a * a + b * b * quarter - target, m) == 0;
                    if (first && second) {
                        out.brute_force = true;
                        out.witness = std::make_pair(a, b);
                        break;
                    }
                }
            }
        } else {
            out.residue_case = "d = 2,3 mod 4";
            out.modulus = 16;
            const long m = 16;
            for (long a = 0; a < m && !out.brute_force; ++a) {
                for (long b = 0; b < m; ++b) {
                    const bool second = mod(2 * a * b, m) == 0;
                    const bool first = mod(a * a + b * b * base_d - target, m) == 0;
                    if (first && second) {
                        out.brute_force = true;
                        out.witness = std::make_pair(a, b);
                        break;
                    }
                }
            }
        }
        out.closed_form = mod(target, 8) == 1 || mod(target, 8) == d8;
    }
    if (out.brute_force != out.closed_form) {
        throw std::logic_error("norm_necessary_condition: exhaustive search and closed form disagree for d=" +
                               std::to_string(base_d) + " r=" + std::to_string(r) + " target=" + std::to_string(target));
    }
    if (base_d == 0 && out.brute_force != in_odd_square_class_mod_32(target)) {
        throw std::logic_error("norm_necessary_condition: inconsistent square class mod 32");
    }
    out.survives = out.brute_force;
    return out;
}

NormCondition norm_necessary_condition_detail(long base_d, long r) {
    return norm_residue_system(base_d, r, signed_norm_pi_r(r));
}

bool norm_necessary_condition(long base_d, long r) { return norm_necessary_condition_detail(base_d, r).survives; }

}  // namespace rrp
