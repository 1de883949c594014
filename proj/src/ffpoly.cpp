#include "rrp/ffpoly.hpp"

#include <stdexcept>

namespace rrp {

namespace {
constexpr unsigned kLimbBits = 64;
}

F2Poly F2Poly::from_mask(std::uint64_t mask) {
    F2Poly p;
    if (mask != 0) {
        p.limbs_.push_back(mask);
    }
    return p;
}

F2Poly F2Poly::from_ints(const std::vector<Int>& coeffs) {
    F2Poly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (mpz_odd_p(coeffs[i].get_mpz_t()) != 0) {
            p.set_coeff(static_cast<unsigned>(i), true);
        }
    }
    return p;
}

F2Poly F2Poly::monomial(unsigned degree) {
    F2Poly p;
    p.set_coeff(degree, true);
    return p;
}

int F2Poly::degree() const {
    if (limbs_.empty()) {
        return -1;
    }
    const std::uint64_t top = limbs_.back();
    return static_cast<int>((limbs_.size() - 1) * kLimbBits) + 63 - __builtin_clzll(top);
}

bool F2Poly::coeff(unsigned i) const {
    const unsigned limb = i / kLimbBits;
    if (limb >= limbs_.size()) {
        return false;
    }
    return ((limbs_[limb] >> (i % kLimbBits)) & 1U) != 0;
}

void F2Poly::set_coeff(unsigned i, bool value) {
    const unsigned limb = i / kLimbBits;
    if (limb >= limbs_.size()) {
        if (!value) {
            return;
        }
        limbs_.resize(limb + 1, 0);
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % kLimbBits);
    if (value) {
        limbs_[limb] |= bit;
    } else {
        limbs_[limb] &= ~bit;
    }
    trim();
}

void F2Poly::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
    if (other.limbs_.size() > limbs_.size()) {
        limbs_.resize(other.limbs_.size(), 0);
    }
    for (std::size_t i = 0; i < other.limbs_.size(); ++i) {
        limbs_[i] ^= other.limbs_[i];
    }
    trim();
    return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    F2Poly out;
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    const int da = a.degree();
    for (int i = 0; i <= da; ++i) {
        if (!a.coeff(static_cast<unsigned>(i))) {
            continue;
        }
        // out ^= b << i
        const unsigned word = static_cast<unsigned>(i) / kLimbBits;
        const unsigned shift = static_cast<unsigned>(i) % kLimbBits;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            out.limbs_[j + word] ^= b.limbs_[j] << shift;
            if (shift != 0) {
                out.limbs_[j + word + 1] ^= b.limbs_[j] >> (kLimbBits - shift);
            }
        }
    }
    out.trim();
    return out;
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("F2Poly: division by zero polynomial");
    }
    F2Poly quotient;
    F2Poly rem = *this;
    const int dd = divisor.degree();
    while (rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        quotient.set_coeff(static_cast<unsigned>(shift), true);
        rem += F2Poly::monomial(static_cast<unsigned>(shift)) * divisor;
    }
    return {quotient, rem};
}

F2Poly F2Poly::derivative() const {
    F2Poly out;
    for (int i = 1; i <= degree(); i += 2) {
        if (coeff(static_cast<unsigned>(i))) {
            out.set_coeff(static_cast<unsigned>(i - 1), true);
        }
    }
    return out;
}

std::string F2Poly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<unsigned>(i))) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly rem = a % b;
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

F2Poly frobenius_power(const F2Poly& base, unsigned k, const F2Poly& m) {
    F2Poly out = base % m;
    for (unsigned i = 0; i < k; ++i) {
        out = (out * out) % m;
    }
    return out;
}

DegreeMultiset ddf_degrees(const F2Poly& p) {
    if (p.degree() < 1) {
        throw std::invalid_argument("ddf_degrees: polynomial must have degree >= 1");
    }
    if (!gcd(p, p.derivative()).is_one()) {
        throw std::invalid_argument("ddf_degrees: polynomial is not squarefree: " + p.to_string());
    }
    DegreeMultiset out;
    const F2Poly x = F2Poly::monomial(1);
    F2Poly rest = p;
    F2Poly h = x % rest;  // x^{2^d} mod rest
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = (h * h) % rest;
        F2Poly g = gcd(rest, h + x);
        if (g.degree() > 0) {
            out[d] += g.degree() / d;
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) {
        out[rest.degree()] += 1;
    }
    return out;
}

bool is_irreducible(const F2Poly& p) {
    if (p.degree() < 1) {
        return false;
    }
    if (!gcd(p, p.derivative()).is_one()) {
        return false;
    }
    const auto degrees = ddf_degrees(p);
    return degrees.size() == 1 && degrees.begin()->first == p.degree();
}

F2Field::F2Field(F2Poly modulus) : modulus_(std::move(modulus)) {
    if (!is_irreducible(modulus_)) {
        throw std::invalid_argument("F2Field: modulus " + modulus_.to_string() + " is not irreducible");
    }
}

F2Field F2Field::standard(int f) {
    if (f < 1 || f > 62) {
        throw std::invalid_argument("F2Field::standard: degree out of supported range");
    }
    const std::uint64_t lead = std::uint64_t{1} << f;
    for (std::uint64_t low = 0; low < lead; ++low) {
        F2Poly candidate = F2Poly::from_mask(lead | low);
        if (is_irreducible(candidate)) {
            return F2Field(std::move(candidate));
        }
    }
    throw std::logic_error("F2Field::standard: no irreducible polynomial found");
}

F2fElem::F2fElem(F2Field field, F2Poly rep) : field_(std::move(field)), rep_(std::move(rep)) {
    rep_ = rep_ % field_.modulus();
}

F2fElem operator+(const F2fElem& a, const F2fElem& b) { return {a.field_, a.rep_ + b.rep_}; }

F2fElem operator*(const F2fElem& a, const F2fElem& b) { return {a.field_, a.rep_ * b.rep_}; }

F2fElem F2fElem::inverse() const {
    if (is_zero()) {
        throw std::domain_error("F2fElem: zero has no inverse");
    }
    // Extended Euclid: s*rep + t*modulus = 1.
    F2Poly r0 = field_.modulus();
    F2Poly r1 = rep_;
    F2Poly s0;
    F2Poly s1 = F2Poly::from_mask(1);
    while (!r1.is_zero()) {
        auto [q, rem] = r0.divmod(r1);
        F2Poly s2 = s0 + q * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {field_, s0};
}

int trace_f2f(const F2fElem& a) {
    F2fElem acc = a;
    F2fElem power = a;
    for (int i = 1; i < a.field().degree(); ++i) {
        power = power.square();
        acc = acc + power;
    }
    if (acc.rep().degree() > 0) {
        throw std::logic_error("trace_f2f: trace did not land in GF(2)");
    }
    return acc.is_zero() ? 0 : 1;
}

F2fElem sqrt_f2f(const F2fElem& a) {
    F2fElem out = a;
    for (int i = 1; i < a.field().degree(); ++i) {
        out = out.square();
    }
    return out;
}

std::optional<F2fElem> solve_artin_schreier(const F2fElem& c) {
    if (trace_f2f(c) != 0) {
        return std::nullopt;
    }
    const auto& field = c.field();
    const int f = field.degree();
    // Row j of the augmented system: bit i = coefficient of t^j in L(t^i), bit f = c_j.
    std::vector<F2Poly> rows(f);
    for (int i = 0; i < f; ++i) {
        F2fElem basis(field, F2Poly::monomial(static_cast<unsigned>(i)));
        F2fElem image = basis.square() + basis;
        for (int j = 0; j < f; ++j) {
            if (image.rep().coeff(static_cast<unsigned>(j))) {
                rows[j].set_coeff(static_cast<unsigned>(i), true);
            }
        }
    }
    for (int j = 0; j < f; ++j) {
        if (c.rep().coeff(static_cast<unsigned>(j))) {
            rows[j].set_coeff(static_cast<unsigned>(f), true);
        }
    }
    std::vector<int> pivot_of_col(f, -1);
    int rank = 0;
    for (int col = 0; col < f && rank < f; ++col) {
        int sel = -1;
        for (int j = rank; j < f; ++j) {
            if (rows[j].coeff(static_cast<unsigned>(col))) {
                sel = j;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        std::swap(rows[rank], rows[sel]);
        for (int j = 0; j < f; ++j) {
            if (j != rank && rows[j].coeff(static_cast<unsigned>(col))) {
                rows[j] += rows[rank];
            }
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (int j = rank; j < f; ++j) {
        if (rows[j].coeff(static_cast<unsigned>(f))) {
            throw std::logic_error("solve_artin_schreier: inconsistent system despite trace 0");
        }
    }
    F2Poly v;
    for (int col = 0; col < f; ++col) {
        if (pivot_of_col[col] >= 0 && rows[pivot_of_col[col]].coeff(static_cast<unsigned>(f))) {
            v.set_coeff(static_cast<unsigned>(col), true);
        }
    }
    F2fElem out(field, v);
    if (out.square() + out != c) {
        throw std::logic_error("solve_artin_schreier: solution check failed");
    }
    return out;
}

std::vector<F2fElem> all_elements(const F2Field& field) {
    const int f = field.degree();
    if (f > 20) {
        throw std::invalid_argument("all_elements: field too large to enumerate");
    }
    std::vector<F2fElem> out;
    out.reserve(std::size_t{1} << f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
        out.emplace_back(field, F2Poly::from_mask(mask));
    }
    return out;
}

}  // namespace rrp
