#include "rrp/galoisring.hpp"

#include <stdexcept>
#include <string>

namespace rrp {

struct GaloisRing::Core {
    unsigned n = 0;
    int f = 0;
    std::uint64_t mask = 0;
    std::vector<std::uint64_t> modulus;  // f+1 entries, monic
    F2Field residue_field;

    Core(unsigned n_, int f_, std::vector<std::uint64_t> m, F2Field field)
        : n(n_), f(f_), mask((std::uint64_t{1} << n_) - 1), modulus(std::move(m)), residue_field(std::move(field)) {}
};

namespace {

std::uint64_t to_word(const Int& value, unsigned n) {
    const Int reduced = mod(value, Int(1) << n);
    return reduced.get_ui();
}

F2Field residue_of_modulus(const std::vector<Int>& modulus) {
    return F2Field(F2Poly::from_ints(modulus));
}

}  // namespace

GaloisRing::GaloisRing(unsigned n, std::vector<Int> modulus) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("GaloisRing: precision must lie in [1, 62]");
    }
    if (modulus.size() < 2 || mod(modulus.back(), Int(1) << n) != 1) {
        throw std::invalid_argument("GaloisRing: modulus must be monic of degree >= 1");
    }
    F2Field field = residue_of_modulus(modulus);
    std::vector<std::uint64_t> words;
    words.reserve(modulus.size());
    for (const auto& c : modulus) {
        words.push_back(to_word(c, n));
    }
    const int f = static_cast<int>(modulus.size()) - 1;
    core_ = std::make_shared<const Core>(n, f, std::move(words), std::move(field));
}

GaloisRing GaloisRing::standard(unsigned n, int f) {
    const F2Field field = F2Field::standard(f);
    std::vector<Int> modulus(f + 1);
    for (int i = 0; i <= f; ++i) {
        modulus[i] = field.modulus().coeff(static_cast<unsigned>(i)) ? 1 : 0;
    }
    return GaloisRing(n, std::move(modulus));
}

unsigned GaloisRing::precision() const { return core_->n; }
int GaloisRing::degree() const { return core_->f; }
const F2Field& GaloisRing::residue_field() const { return core_->residue_field; }
const std::vector<std::uint64_t>& GaloisRing::modulus() const { return core_->modulus; }

GaloisRingElem GaloisRing::zero() const { return {core_, std::vector<std::uint64_t>(core_->f, 0)}; }

GaloisRingElem GaloisRing::one() const { return from_int(1); }

GaloisRingElem GaloisRing::from_int(const Int& value) const {
    std::vector<std::uint64_t> c(core_->f, 0);
    c[0] = to_word(value, core_->n);
    return {core_, std::move(c)};
}

GaloisRingElem GaloisRing::from_coeffs(const std::vector<Int>& coeffs) const {
    // Reduce modulo the modulus, allowing inputs of any length.
    std::vector<std::uint64_t> c(std::max<std::size_t>(coeffs.size(), core_->f), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        c[i] = to_word(coeffs[i], core_->n);
    }
    const int f = core_->f;
    for (int top = static_cast<int>(c.size()) - 1; top >= f; --top) {
        const std::uint64_t lead = c[top];
        for (int i = 0; i < f; ++i) {
            c[top - f + i] -= lead * core_->modulus[i];
        }
        c[top] = 0;
    }
    c.resize(f);
    for (auto& w : c) {
        w &= core_->mask;
    }
    return {core_, std::move(c)};
}

GaloisRingElem GaloisRing::lift(const F2fElem& residue) const {
    if (!(residue.field() == core_->residue_field)) {
        throw std::invalid_argument("GaloisRing::lift: residue field mismatch");
    }
    std::vector<std::uint64_t> c(core_->f, 0);
    for (int i = 0; i < core_->f; ++i) {
        c[i] = residue.rep().coeff(static_cast<unsigned>(i)) ? 1 : 0;
    }
    return {core_, std::move(c)};
}

std::vector<GaloisRingElem> GaloisRing::elements() const {
    const unsigned bits = core_->n * static_cast<unsigned>(core_->f);
    if (bits > 20) {
        throw std::invalid_argument("GaloisRing::elements: ring too large to enumerate");
    }
    std::vector<GaloisRingElem> out;
    out.reserve(std::size_t{1} << bits);
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
        std::vector<std::uint64_t> c(core_->f);
        for (int i = 0; i < core_->f; ++i) {
            c[i] = (index >> (core_->n * static_cast<unsigned>(i))) & core_->mask;
        }
        out.push_back(GaloisRingElem(core_, std::move(c)));
    }
    return out;
}

GaloisRingElem::GaloisRingElem(std::shared_ptr<const GaloisRing::Core> core, std::vector<std::uint64_t> coeffs)
    : core_(std::move(core)), coeffs_(std::move(coeffs)) {}

F2fElem GaloisRingElem::residue() const {
    F2Poly rep;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if ((coeffs_[i] & 1U) != 0) {
            rep.set_coeff(static_cast<unsigned>(i), true);
        }
    }
    return {core_->residue_field, rep};
}

bool GaloisRingElem::is_zero() const {
    for (auto w : coeffs_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool GaloisRingElem::divisible_by_two_power(unsigned k) const {
    if (k >= core_->n) {
        return is_zero();
    }
    const std::uint64_t low = (std::uint64_t{1} << k) - 1;
    for (auto w : coeffs_) {
        if ((w & low) != 0) {
            return false;
        }
    }
    return true;
}

GaloisRingElem GaloisRingElem::shift_down(unsigned k) const {
    if (!divisible_by_two_power(k)) {
        throw std::domain_error("GaloisRingElem::shift_down: element not divisible by 2^k");
    }
    std::vector<std::uint64_t> c = coeffs_;
    for (auto& w : c) {
        w >>= k;
    }
    return {core_, std::move(c)};
}

GaloisRingElem& GaloisRingElem::operator+=(const GaloisRingElem& other) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = (coeffs_[i] + other.coeffs_[i]) & core_->mask;
    }
    return *this;
}

GaloisRingElem& GaloisRingElem::operator-=(const GaloisRingElem& other) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] = (coeffs_[i] - other.coeffs_[i]) & core_->mask;
    }
    return *this;
}

GaloisRingElem operator*(const GaloisRingElem& a, const GaloisRingElem& b) {
    const auto& core = *a.core_;
    const int f = core.f;
    std::vector<std::uint64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        for (int j = 0; j < f; ++j) {
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    for (int top = 2 * f - 2; top >= f; --top) {
        const std::uint64_t lead = prod[top];
        for (int i = 0; i < f; ++i) {
            prod[top - f + i] -= lead * core.modulus[i];
        }
    }
    prod.resize(f);
    for (auto& w : prod) {
        w &= core.mask;
    }
    return {a.core_, std::move(prod)};
}

GaloisRingElem GaloisRingElem::scaled(std::uint64_t factor) const {
    std::vector<std::uint64_t> c = coeffs_;
    for (auto& w : c) {
        w = (w * factor) & core_->mask;
    }
    return {core_, std::move(c)};
}

GaloisRingElem GaloisRingElem::inverse() const {
    const F2fElem res = residue();
    if (res.is_zero()) {
        throw std::domain_error("GaloisRingElem::inverse: element is not a unit");
    }
    const GaloisRing ring(core_);
    GaloisRingElem x = ring.lift(res.inverse());
    const GaloisRingElem two = ring.from_int(2);
    for (unsigned precision = 1; precision < core_->n; precision *= 2) {
        x = x * (two - *this * x);
    }
    if (x * *this != ring.one()) {
        throw std::logic_error("GaloisRingElem::inverse: Newton iteration failed");
    }
    return x;
}

namespace {

struct SquareStart {
    GaloisRingElem root;  // square root modulo 8 when the class is a square
    UnitSquareClass cls;
};

std::optional<SquareStart> start_square_root(const GaloisRingElem& u, UnitSquareClass& cls) {
    const GaloisRing ring = u.ring();
    if (ring.precision() < 3) {
        throw std::invalid_argument("gr_sqrt: precision must be at least 3 (mod-8 obstruction)");
    }
    if (!u.is_unit()) {
        throw std::invalid_argument("gr_sqrt: input is not a unit");
    }
    const GaloisRingElem a = ring.lift(sqrt_f2f(u.residue()));
    const GaloisRingElem a_sq = a * a;
    cls.mod4_ok = (u - a_sq).divisible_by_two_power(2);
    if (!cls.mod4_ok) {
        return std::nullopt;
    }
    const GaloisRingElem w = u * a_sq.inverse();
    const F2fElem c = (w - ring.one()).shift_down(2).residue();
    cls.mod8_trace = trace_f2f(c);
    const auto v = solve_artin_schreier(c);
    if (!v) {
        return std::nullopt;
    }
    const GaloisRingElem s = a * (ring.one() + ring.lift(*v).scaled(2));
    return SquareStart{s, cls};
}

}  // namespace

UnitSquareClass unit_square_class(const GaloisRingElem& u) {
    UnitSquareClass cls;
    start_square_root(u, cls);
    return cls;
}

std::optional<GaloisRingElem> gr_sqrt(const GaloisRingElem& u) {
    UnitSquareClass cls;
    auto start = start_square_root(u, cls);
    if (!start) {
        return std::nullopt;
    }
    const GaloisRing ring = u.ring();
    const unsigned n = ring.precision();
    GaloisRingElem s = start->root;
    for (unsigned k = 3; k < n; ++k) {
        const GaloisRingElem diff = u - s * s;
        const F2fElem e = diff.shift_down(k).residue();
        const F2fElem t = e * s.residue().inverse();
        s += ring.lift(t).scaled(std::uint64_t{1} << (k - 1));
    }
    if (s * s != u) {
        throw std::logic_error("gr_sqrt: Hensel lifting did not reach a root");
    }
    return s;
}

bool is_square_after_unramified_extension(const GaloisRingElem& u, int extension_degree) {
    if (extension_degree < 1) {
        throw std::invalid_argument("extension degree must be positive");
    }
    const UnitSquareClass cls = unit_square_class(u);
    if (!cls.mod4_ok) {
        return false;
    }
    return (static_cast<long>(extension_degree) * *cls.mod8_trace) % 2 == 0;
}

GaloisRing ring_for_inert_two(const RealCyclotomicField& field, unsigned n) {
    return GaloisRing(n, field.psi());
}

GaloisRingElem to_galois_ring(const GaloisRing& ring, const CycInt& a) {
    return ring.from_coeffs(a.coeffs());
}

bool is_square_pi_r(const RealCyclotomicField& field, unsigned n) {
    const auto degrees = ddf_degrees(F2Poly::from_ints(field.psi()));
    if (degrees.size() != 1 || degrees.begin()->first != field.degree()) {
        throw std::invalid_argument("is_square_pi_r: 2 is not inert in Q(zeta_r + zeta_r^-1) for r = " +
                                    std::to_string(field.r()));
    }
    const GaloisRing ring = ring_for_inert_two(field, n);
    return gr_sqrt(to_galois_ring(ring, field.pi_r())).has_value();
}

}  // namespace rrp
