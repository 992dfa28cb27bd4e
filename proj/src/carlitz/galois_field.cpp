#include "eisen/carlitz/galois_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "eisen/arith/integer.hpp"
#include "eisen/errors.hpp"

namespace eisen {

namespace {

using Digits = std::vector<unsigned>;

Digits to_digits(unsigned x, unsigned long p, unsigned rho) {
    Digits d(rho);
    for (unsigned k = 0; k < rho; ++k) {
        d[k] = x % p;
        x /= static_cast<unsigned>(p);
    }
    return d;
}

unsigned from_digits(const Digits& d, unsigned long p) {
    unsigned x = 0;
    for (std::size_t k = d.size(); k-- > 0;) x = x * static_cast<unsigned>(p) + d[k];
    return x;
}

/// Remainder of a (low-to-high) modulo the monic m over F_p.
Digits poly_mod(Digits a, const Digits& m, unsigned long p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t k = a.size(); k-- > dm;) {
        const unsigned c = a[k] % p;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dm; ++t) a[k - dm + t] = (a[k - dm + t] + (p - c) * m[t]) % p;
    }
    a.resize(dm);
    return a;
}

bool is_irreducible_fp(const Digits& m, unsigned long p) {
    const unsigned deg = static_cast<unsigned>(m.size() - 1);
    if (deg <= 1) return true;
    // Trial division by every monic polynomial of degree 1 … deg/2.
    for (unsigned d = 1; d * 2 <= deg; ++d) {
        unsigned long count = 1;
        for (unsigned k = 0; k < d; ++k) count *= p;
        for (unsigned long code = 0; code < count; ++code) {
            Digits g = to_digits(static_cast<unsigned>(code), p, d);
            g.push_back(1);
            Digits r = poly_mod(m, g, p);
            bool zero = true;
            for (unsigned c : r) zero = zero && c % p == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<unsigned> default_fr_modulus(unsigned long p, unsigned rho) {
    if (rho == 1) return {0, 1};
    if (p == 3 && rho == 2) return {1, 0, 1};
    unsigned long count = 1;
    for (unsigned k = 0; k < rho; ++k) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
        Digits m = to_digits(static_cast<unsigned>(code), p, rho);
        m.push_back(1);
        if (is_irreducible_fp(m, p)) return m;
    }
    throw InternalError("no irreducible polynomial found");
}

GaloisField::GaloisField(unsigned long p, unsigned rho, std::vector<unsigned> modulus)
    : p_(p), rho_(rho), modulus_(std::move(modulus)) {
    r_ = 1;
    for (unsigned k = 0; k < rho; ++k) r_ *= static_cast<unsigned>(p);
    add_.resize(r_ * r_);
    mul_.resize(r_ * r_);
    neg_.resize(r_);
    inv_.assign(r_, 0);
    for (unsigned a = 0; a < r_; ++a) {
        const Digits da = to_digits(a, p, rho);
        Digits na(rho);
        for (unsigned k = 0; k < rho; ++k) na[k] = (p - da[k]) % p;
        neg_[a] = static_cast<FrElem>(from_digits(na, p));
        for (unsigned b = 0; b < r_; ++b) {
            const Digits db = to_digits(b, p, rho);
            Digits s(rho);
            for (unsigned k = 0; k < rho; ++k) s[k] = (da[k] + db[k]) % p;
            add_[a * r_ + b] = static_cast<FrElem>(from_digits(s, p));
            Digits prod(2 * rho - 1);
            for (unsigned i = 0; i < rho; ++i)
                for (unsigned j = 0; j < rho; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            Digits red = rho == 1 ? prod : poly_mod(prod, modulus_, p);
            red.resize(rho);
            mul_[a * r_ + b] = static_cast<FrElem>(from_digits(red, p));
        }
    }
    for (unsigned a = 1; a < r_; ++a)
        for (unsigned b = 1; b < r_; ++b)
            if (mul_[a * r_ + b] == 1) inv_[a] = static_cast<FrElem>(b);
}

const GaloisField& GaloisField::get(unsigned long p, unsigned rho, const std::vector<unsigned>& modulus) {
    if (!is_odd_prime(p)) throw ParameterError("field characteristic must be an odd prime");
    if (rho < 1) throw ParameterError("rho must be >= 1");
    unsigned long r = 1;
    for (unsigned k = 0; k < rho; ++k) r *= p;
    if (r > 256) throw CapExceeded("F_r with r > 256 is not supported");
    std::vector<unsigned> m = modulus.empty() ? default_fr_modulus(p, rho) : modulus;
    if (rho > 1) {
        if (m.size() != rho + 1 || m.back() != 1) throw ParameterError("F_r modulus must be monic of degree rho");
        for (auto& c : m) {
            if (c >= p) throw ParameterError("F_r modulus coefficient out of range");
        }
        if (!is_irreducible_fp(m, p)) throw ParameterError("F_r modulus is reducible");
    } else {
        m = {0, 1};
    }
    static std::mutex lock;
    static std::map<std::tuple<unsigned long, unsigned, std::vector<unsigned>>, std::unique_ptr<GaloisField>> registry;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = registry[{p, rho, m}];
    if (!slot) slot.reset(new GaloisField(p, rho, m));
    return *slot;
}

FrElem GaloisField::inv(FrElem a) const {
    if (a == 0) throw InexactDivision("inverse of zero in F_r");
    return inv_[a];
}

FrElem GaloisField::from_int(long k) const {
    const long pp = static_cast<long>(p_);
    return static_cast<FrElem>(((k % pp) + pp) % pp);
}

std::string GaloisField::to_string(FrElem a) const {
    if (rho_ == 1) return std::to_string(a);
    const Digits d = to_digits(a, p_, rho_);
    std::string out;
    for (std::size_t k = d.size(); k-- > 0;) {
        if (d[k] == 0) continue;
        std::string term = k == 0 ? std::to_string(d[k]) : (d[k] == 1 ? "" : std::to_string(d[k]) + "*") +
                                                                 (k == 1 ? "t" : "t^" + std::to_string(k));
        out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace eisen
