#include "eisen/carlitz/poly_fr.hpp"

#include <algorithm>
#include <sstream>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

const GaloisField* context(const PolyFr& a, const PolyFr& b) {
    const GaloisField* f = a.field() ? a.field() : b.field();
    if (a.field() && b.field() && a.field() != b.field()) throw ParameterError("polynomials over different fields");
    return f;
}

const GaloisField& require_context(const GaloisField* f) {
    if (!f) throw InternalError("F_r polynomial without field context");
    return *f;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

PolyFr::PolyFr(const GaloisField& field, std::vector<FrElem> coeffs) : field_(&field), c_(std::move(coeffs)) {
    normalize();
}

void PolyFr::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFr PolyFr::constant(const GaloisField& field, FrElem c) { return PolyFr(field, {c}); }

PolyFr PolyFr::monomial(const GaloisField& field, FrElem c, std::size_t k) {
    std::vector<FrElem> v(k + 1, 0);
    v[k] = c;
    return PolyFr(field, std::move(v));
}

PolyFr operator+(const PolyFr& a, const PolyFr& b) {
    const GaloisField* f = context(a, b);
    if (!f) return {};
    if (a.is_zero()) return PolyFr(*f, b.c_);
    if (b.is_zero()) return PolyFr(*f, a.c_);
    std::vector<FrElem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f->add(a.coeff(k), b.coeff(k));
    return PolyFr(*f, std::move(v));
}

PolyFr operator-(const PolyFr& a, const PolyFr& b) {
    const GaloisField* f = context(a, b);
    if (!f) return {};
    std::vector<FrElem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f->sub(a.coeff(k), b.coeff(k));
    return PolyFr(*f, std::move(v));
}

PolyFr PolyFr::operator-() const {
    if (!field_) return {};
    std::vector<FrElem> v(c_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_->neg(c_[k]);
    return PolyFr(*field_, std::move(v));
}

PolyFr operator*(const PolyFr& a, const PolyFr& b) {
    const GaloisField* f = context(a, b);
    if (!f) return {};
    if (a.is_zero() || b.is_zero()) return PolyFr::zero(*f);
    const std::size_t n = a.c_.size(), m = b.c_.size();
    std::vector<FrElem> v(n + m - 1, 0);
    if (f->rho() == 1) {
        // Prime field: accumulate in machine integers and reduce once per slot.
        const unsigned p = static_cast<unsigned>(f->p());
        const unsigned long long flush = (~0ULL) / (static_cast<unsigned long long>(p) * p) - 1;
        std::vector<unsigned long long> acc(n + m - 1, 0);
        if (std::min(n, m) <= flush) {
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned x = a.c_[i];
                if (!x) continue;
                for (std::size_t j = 0; j < m; ++j) acc[i + j] += static_cast<unsigned long long>(x) * b.c_[j];
            }
            for (std::size_t k = 0; k < acc.size(); ++k) v[k] = static_cast<FrElem>(acc[k] % p);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j) v[i + j] = f->add(v[i + j], f->mul(a.c_[i], b.c_[j]));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const FrElem x = a.c_[i];
            if (!x) continue;
            for (std::size_t j = 0; j < m; ++j) v[i + j] = f->add(v[i + j], f->mul(x, b.c_[j]));
        }
    }
    return PolyFr(*f, std::move(v));
}

PolyFr PolyFr::scaled(FrElem s) const {
    if (!field_) return {};
    std::vector<FrElem> v(c_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_->mul(c_[k], s);
    return PolyFr(*field_, std::move(v));
}

PolyFr PolyFr::shifted(std::size_t k) const {
    if (!field_ || c_.empty()) return *this;
    std::vector<FrElem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return PolyFr(*field_, std::move(v));
}

PolyFr PolyFr::inflated(std::size_t k) const {
    if (!field_ || c_.empty()) return *this;
    std::vector<FrElem> v((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return PolyFr(*field_, std::move(v));
}

PolyFr PolyFr::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(c_.back()));
}

std::pair<PolyFr, PolyFr> divrem(const PolyFr& a, const PolyFr& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    const GaloisField& f = require_context(context(a, b));
    if (a.degree() < b.degree()) return {PolyFr::zero(f), a.is_zero() ? PolyFr::zero(f) : a};
    std::vector<FrElem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const FrElem inv = f.inv(bc.back());
    std::vector<FrElem> q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        const FrElem top = r[k];
        if (!top) continue;
        const FrElem t = f.mul(top, inv);
        q[k - db] = t;
        for (std::size_t i = 0; i <= db; ++i)
            if (bc[i]) r[k - db + i] = f.sub(r[k - db + i], f.mul(t, bc[i]));
    }
    r.resize(db);
    return {PolyFr(f, std::move(q)), PolyFr(f, std::move(r))};
}

PolyFr operator%(const PolyFr& a, const PolyFr& b) { return divrem(a, b).second; }

PolyFr exact_div(const PolyFr& a, const PolyFr& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InexactDivision();
    return q;
}

PolyFr gcd(const PolyFr& a, const PolyFr& b) {
    PolyFr x = a, y = b;
    while (!y.is_zero()) {
        PolyFr r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyFr pow(const PolyFr& a, unsigned long e) {
    const GaloisField& f = require_context(a.field());
    PolyFr result = PolyFr::one(f), b = a;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

PolyFr powmod(const PolyFr& a, unsigned long long e, const PolyFr& m) {
    const GaloisField& f = require_context(context(a, m));
    PolyFr result = PolyFr::one(f) % m, b = a % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

long valuation(const PolyFr& a, const PolyFr& f) {
    if (a.is_zero()) throw InfiniteValuation();
    if (f.degree() < 1) throw ParameterError("valuation needs a non-constant prime");
    long v = 0;
    PolyFr x = a;
    while (true) {
        auto [q, r] = divrem(x, f);
        if (!r.is_zero()) return v;
        x = std::move(q);
        ++v;
    }
}

bool is_irreducible(const PolyFr& f) {
    const GaloisField& F = require_context(f.field());
    const long d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const unsigned long long r = F.size();
    // Y^{r^k} mod f by repeated r-th powers.
    auto frob_power = [&](long k) {
        PolyFr x = PolyFr::y(F) % f;
        for (long t = 0; t < k; ++t) x = powmod(x, r, f);
        return x;
    };
    const PolyFr y = PolyFr::y(F);
    if (!((frob_power(d) - y) % f).is_zero()) return false;
    for (unsigned s : prime_factors(static_cast<unsigned>(d))) {
        const PolyFr g = gcd(frob_power(d / s) - y, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

bool is_zero(const PolyFr& a) { return a.is_zero(); }

PolyFr one_like(const PolyFr& a) { return PolyFr::one(require_context(a.field())); }

PolyFr times_int(const PolyFr& a, long k) {
    if (!a.field()) return {};
    return a.scaled(a.field()->from_int(k));
}

std::string to_string(const PolyFr& a, const std::string& var) {
    if (a.is_zero()) return "0";
    const GaloisField& f = *a.field();
    std::string out;
    for (long k = a.degree(); k >= 0; --k) {
        const FrElem c = a.coeffs()[static_cast<std::size_t>(k)];
        if (!c) continue;
        std::string cs = f.to_string(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        std::string term;
        if (k == 0)
            term = cs;
        else
            term = (c == 1 ? "" : cs + "*") + (k == 1 ? var : var + "^" + std::to_string(k));
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

PolyFr parse_poly_fr(const GaloisField& field, const std::string& text) {
    std::vector<FrElem> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw ParameterError("not an F_r coefficient: '" + item + "'");
        }
        if (used != item.size() || v >= field.size())
            throw ParameterError("not an F_r coefficient: '" + item + "'");
        c.push_back(static_cast<FrElem>(v));
    }
    if (c.empty()) throw ParameterError("empty polynomial");
    return PolyFr(field, std::move(c));
}

RatFunc::RatFunc(PolyFr num) : num_(std::move(num)) {
    if (num_.field()) den_ = PolyFr::one(*num_.field());
}

RatFunc::RatFunc(PolyFr num, PolyFr den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InexactDivision("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    const GaloisField* f = field();
    if (!f) return;
    if (num_.is_zero()) {
        num_ = PolyFr::zero(*f);
        den_ = PolyFr::one(*f);
        return;
    }
    const PolyFr g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const FrElem lc = den_.lc();
    if (lc != 1) {
        const FrElem inv = f->inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -num_;
    return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InexactDivision("division by zero");
    if (a.is_zero()) return a;
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool is_zero(const RatFunc& a) { return a.is_zero(); }

RatFunc one_like(const RatFunc& a) {
    const GaloisField* f = a.field();
    if (!f) throw InternalError("rational function without field context");
    return RatFunc(PolyFr::one(*f));
}

RatFunc times_int(const RatFunc& a, long k) {
    if (!a.field()) return a;
    return RatFunc(times_int(a.num(), k), a.den());
}

RatFunc inverse(const RatFunc& a) {
    if (a.is_zero()) throw InexactDivision("inverse of zero");
    return RatFunc(a.den(), a.num());
}

RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

long valuation(const RatFunc& a, const PolyFr& f) {
    if (a.is_zero()) throw InfiniteValuation();
    return valuation(a.num(), f) - valuation(a.den(), f);
}

std::string to_string(const RatFunc& a) {
    if (a.is_polynomial()) return to_string(a.num());
    return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

}  // namespace eisen
