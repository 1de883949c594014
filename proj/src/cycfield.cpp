#include "rrp/cycfield.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "rrp/matrix.hpp"

namespace rrp {

namespace detail {

struct FieldCore {
    long r = 0;
    int d = 0;
    IntPoly psi;                        // monic, degree d
    std::vector<std::vector<Int>> power_sums;  // zeta^k + zeta^-k on the theta basis
};

namespace {

// Reduce an arbitrary-length coefficient vector modulo the monic psi, in place.
std::vector<Int> reduce(const FieldCore& core, std::vector<Int> c) {
    const int d = core.d;
    for (int top = static_cast<int>(c.size()) - 1; top >= d; --top) {
        if (c[top] == 0) {
            continue;
        }
        const Int lead = c[top];
        for (int i = 0; i < d; ++i) {
            c[top - d + i] -= lead * core.psi[i];
        }
        c[top] = 0;
    }
    c.resize(d);
    return c;
}

std::vector<Int> multiply(const FieldCore& core, const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> prod(2 * core.d - 1);
    for (int i = 0; i < core.d; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; j < core.d; ++j) {
            prod[i + j] += a[i] * b[j];
        }
    }
    return reduce(core, std::move(prod));
}

}  // namespace
}  // namespace detail

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Int poly_eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPoly poly_derivative(const IntPoly& p) {
    if (p.size() <= 1) {
        return {};
    }
    IntPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        out[i - 1] = p[i] * static_cast<unsigned long>(i);
    }
    return out;
}

RealCyclotomicField::RealCyclotomicField(long r) {
    if (r < 5 || !is_prime(r)) {
        throw std::invalid_argument("real cyclotomic field: r must be a prime >= 5, got " + std::to_string(r));
    }
    auto core = std::make_shared<detail::FieldCore>();
    core->r = r;
    core->d = static_cast<int>((r - 1) / 2);
    const int d = core->d;

    // C_k as polynomials in t; psi = 1 + sum_{k=1}^{d} C_k.
    IntPoly c_prev{Int(2)};
    IntPoly c_cur{Int(0), Int(1)};
    IntPoly psi(d + 1);
    psi[0] = 1;
    for (int k = 1; k <= d; ++k) {
        for (std::size_t i = 0; i < c_cur.size(); ++i) {
            psi[i] += c_cur[i];
        }
        IntPoly next(c_cur.size() + 1);
        for (std::size_t i = 0; i < c_cur.size(); ++i) {
            next[i + 1] += c_cur[i];
        }
        for (std::size_t i = 0; i < c_prev.size(); ++i) {
            next[i] -= c_prev[i];
        }
        c_prev = std::move(c_cur);
        c_cur = std::move(next);
    }
    core->psi = std::move(psi);

    // s(0) = 2, s(1) = theta, s(k) = theta s(k-1) - s(k-2).
    std::vector<Int> theta(d);
    theta[1] = 1;
    core->power_sums.reserve(r);
    std::vector<Int> two(d);
    two[0] = 2;
    core->power_sums.push_back(two);
    core->power_sums.push_back(theta);
    for (long k = 2; k < r; ++k) {
        auto next = detail::multiply(*core, theta, core->power_sums[k - 1]);
        for (int i = 0; i < d; ++i) {
            next[i] -= core->power_sums[k - 2][i];
        }
        core->power_sums.push_back(std::move(next));
    }
    core_ = std::move(core);
}

long RealCyclotomicField::r() const { return core_->r; }
int RealCyclotomicField::degree() const { return core_->d; }
const IntPoly& RealCyclotomicField::psi() const { return core_->psi; }

CycInt RealCyclotomicField::zero() const { return CycInt(core_, std::vector<Int>(core_->d)); }

CycInt RealCyclotomicField::one() const { return from_int(1); }

CycInt RealCyclotomicField::from_int(const Int& n) const {
    std::vector<Int> c(core_->d);
    c[0] = n;
    return CycInt(core_, std::move(c));
}

CycInt RealCyclotomicField::theta() const { return CycInt(core_, core_->power_sums[1]); }

CycInt RealCyclotomicField::from_coeffs(std::vector<Int> coeffs) const {
    return CycInt(core_, detail::reduce(*core_, std::move(coeffs)));
}

CycInt RealCyclotomicField::theta_power_sum(long k) const {
    if (k < 0 || k >= core_->r) {
        throw std::out_of_range("theta_power_sum: k must lie in [0, r-1], got " + std::to_string(k));
    }
    return CycInt(core_, core_->power_sums[k]);
}

CycInt RealCyclotomicField::pi_r() const { return theta() - from_int(2); }

Int RealCyclotomicField::norm(const CycInt& a) const {
    if (a.core_ != core_ && a.r() != r()) {
        throw std::invalid_argument("norm: element belongs to a different field");
    }
    const int d = core_->d;
    Matrix<Int> m(d, d);
    std::vector<Int> row = a.coeffs();
    const auto& theta_c = core_->power_sums[1];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m(i, j) = row[j];
        }
        row = detail::multiply(*core_, row, theta_c);
    }
    return determinant_bareiss(std::move(m));
}

Int RealCyclotomicField::psi_discriminant() const {
    const int d = core_->d;
    auto derivative = poly_derivative(core_->psi);
    derivative.resize(d);
    Int n = norm(from_coeffs(derivative));
    const long pairs = static_cast<long>(d) * (d - 1) / 2;
    return (pairs % 2 == 0) ? n : Int(-n);
}

CycInt::CycInt(std::shared_ptr<const detail::FieldCore> core, std::vector<Int> coeffs)
    : core_(std::move(core)), coeffs_(std::move(coeffs)) {}

RealCyclotomicField CycInt::field() const { return RealCyclotomicField(core_); }

long CycInt::r() const { return core_->r; }

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

void CycInt::check_same_field(const CycInt& other) const {
    if (core_ != other.core_ && core_->r != other.core_->r) {
        throw std::invalid_argument("CycInt: operands from different fields");
    }
}

CycInt& CycInt::operator+=(const CycInt& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
    check_same_field(other);
    coeffs_ = detail::multiply(*core_, coeffs_, other.coeffs_);
    return *this;
}

CycInt& CycInt::operator*=(const Int& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

bool CycInt::operator==(const CycInt& other) const {
    return core_->r == other.core_->r && coeffs_ == other.coeffs_;
}

std::string to_string(const CycInt& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Int& c = a[i];
        if (c == 0) {
            continue;
        }
        Int mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) {
                os << mag << "*";
            }
            os << "theta";
            if (i > 1) {
                os << "^" << i;
            }
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) { return os << to_string(a); }

CycInt pow(const CycInt& base, unsigned exponent) {
    CycInt result = base.field().one();
    CycInt b = base;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

CycInt f_k_eval(long k, const CycInt& x, const CycInt& y) {
    const auto field = x.field();
    if (k < 0 || k > field.degree()) {
        throw std::out_of_range("f_k_eval: k must lie in [0, (r-1)/2], got " + std::to_string(k));
    }
    return x * x + field.theta_power_sum(k) * x * y + y * y;
}

CycInt phi_r_eval(const CycInt& x, const CycInt& y) {
    const long r = x.r();
    CycInt acc = x.field().zero();
    // Straightforward evaluation keeps the identity with (x+y) transparent.
    CycInt x_pow = x.field().one();
    std::vector<CycInt> x_powers{x_pow};
    for (long i = 1; i < r; ++i) {
        x_pow *= x;
        x_powers.push_back(x_pow);
    }
    CycInt y_pow = x.field().one();
    for (long i = 0; i < r; ++i) {
        CycInt term = x_powers[r - 1 - i] * y_pow;
        if (i % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        y_pow *= y;
    }
    return acc;
}

FreyCoefficients alpha_beta_gamma(const RealCyclotomicField& field, long k1, long k2, long k3) {
    const long d = field.degree();
    for (long k : {k1, k2, k3}) {
        if (k < 0 || k > d) {
            throw std::out_of_range("alpha_beta_gamma: indices must lie in [0, (r-1)/2]");
        }
    }
    if (k1 == k2 || k2 == k3 || k1 == k3) {
        throw std::invalid_argument("alpha_beta_gamma: indices must be distinct");
    }
    const auto& s1 = field.theta_power_sum(k1);
    const auto& s2 = field.theta_power_sum(k2);
    const auto& s3 = field.theta_power_sum(k3);
    return {s3 - s2, s1 - s3, s2 - s1};
}

std::vector<Int> reduce_mod(const CycInt& a, const Int& m) {
    if (m < 2) {
        throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    }
    std::vector<Int> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        out.push_back(mod(c, m));
    }
    return out;
}

}  // namespace rrp
