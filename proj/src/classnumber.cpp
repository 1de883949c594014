#include "rrp/classnumber.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "rrp/matrix.hpp"

namespace rrp {

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

HMinusResult maillet_h_minus(long r) {
    if (r < 5 || r > 200 || !is_prime(r)) {
        throw std::invalid_argument("maillet_h_minus: r must be a prime in [5, 200], got " + std::to_string(r));
    }
    const long m = (r - 1) / 2;
    Matrix<Int> maillet(m, m);
    for (long b = 1; b <= m; ++b) {
        const long b_inv = invmod_prime(b, r);
        for (long a = 1; a <= m; ++a) {
            maillet(a - 1, b - 1) = (a * b_inv) % r;
        }
    }
    HMinusResult out;
    out.r = r;
    out.scaling_exponent = (r - 3) / 2;
    out.determinant = determinant_bareiss(std::move(maillet));
    const Int scale = pow(Int(r), static_cast<unsigned long>(out.scaling_exponent));
    if (mpz_divisible_p(out.determinant.get_mpz_t(), scale.get_mpz_t()) == 0) {
        throw std::logic_error("maillet_h_minus: determinant not divisible by r^((r-3)/2) for r = " +
                               std::to_string(r));
    }
    out.h_minus = abs(out.determinant) / scale;
    if (out.h_minus < 1) {
        throw std::logic_error("maillet_h_minus: vanishing determinant");
    }
    out.parity = mpz_odd_p(out.h_minus.get_mpz_t()) != 0 ? Parity::odd : Parity::even;
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

HPlusTable HPlusTable::parse(const std::string& text, std::string origin) {
    HPlusTable table;
    table.origin_ = std::move(origin);
    table.digest_ = text.empty() ? std::string{} : sha256_hex(text);
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        HPlusTableEntry entry;
        std::string parity;
        if (!(fields >> entry.base_d)) {
            continue;  // blank or comment-only line
        }
        if (!(fields >> entry.r >> parity)) {
            throw std::invalid_argument(table.origin_ + ":" + std::to_string(line_no) +
                                        ": expected `d r parity source...`");
        }
        if (parity == "odd") {
            entry.parity = Parity::odd;
        } else if (parity == "even") {
            entry.parity = Parity::even;
        } else {
            throw std::invalid_argument(table.origin_ + ":" + std::to_string(line_no) + ": parity must be odd or even");
        }
        std::getline(fields >> std::ws, entry.source);
        while (!entry.source.empty() && std::isspace(static_cast<unsigned char>(entry.source.back()))) {
            entry.source.pop_back();
        }
        if (entry.source.empty()) {
            throw std::invalid_argument(table.origin_ + ":" + std::to_string(line_no) + ": missing source attestation");
        }
        const auto key = std::make_pair(entry.base_d, entry.r);
        if (!table.entries_.emplace(key, entry).second) {
            throw std::invalid_argument(table.origin_ + ":" + std::to_string(line_no) + ": duplicate entry for d=" +
                                        std::to_string(entry.base_d) + " r=" + std::to_string(entry.r));
        }
    }
    return table;
}

HPlusTable HPlusTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read h+ parity table: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

const HPlusTableEntry* HPlusTable::find(long base_d, long r) const {
    const auto it = entries_.find({base_d, r});
    return it == entries_.end() ? nullptr : &it->second;
}

HPlusParityOutcome h_plus_parity(long base_d, long r, const HPlusTable& table) {
    HPlusParityOutcome out;
    if (base_d == 0) {
        const HMinusResult h = maillet_h_minus(r);
        out.status = h.parity == Parity::odd ? ParityStatus::odd : ParityStatus::even;
        out.source = "Maillet determinant, h^- = " + h.h_minus.get_str();
        out.h_minus = h.h_minus;
        return out;
    }
    if (const auto* entry = table.find(base_d, r)) {
        out.status = entry->parity == Parity::odd ? ParityStatus::odd : ParityStatus::even;
        out.source = entry->source;
        return out;
    }
    out.status = ParityStatus::undetermined;
    out.source = "missing h+ table entry: d=" + std::to_string(base_d) + " r=" + std::to_string(r);
    return out;
}

}  // namespace rrp
