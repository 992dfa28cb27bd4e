#include "eisen/tower/cyclotomic_field.hpp"

#include <algorithm>
#include <limits>

#include "eisen/arith/resultant.hpp"
#include "eisen/cyclotomic/shifted.hpp"
#include "eisen/errors.hpp"

namespace eisen {

CyclotomicField::CyclotomicField(unsigned long p, unsigned n)
    : p_(p), n_(n), modulus_(cyclotomic_prime_power(p, n)) {
    sub_order_ = 1;
    for (unsigned k = 1; k < n; ++k) sub_order_ *= p;
    order_ = sub_order_ * p;
    dim_ = order_ - sub_order_;
}

std::vector<Integer> CyclotomicField::reduce(std::vector<Integer> coeffs) const {
    // X^{p^n} = 1, then X^{(p-1)p^{n-1}+t} = -Σ_{k<p-1} X^{k p^{n-1}+t}.
    if (coeffs.size() > order_) {
        for (std::size_t k = order_; k < coeffs.size(); ++k)
            if (!eisen::is_zero(coeffs[k])) coeffs[k % order_] += coeffs[k];
        coeffs.resize(order_);
    }
    if (coeffs.size() > dim_) {
        coeffs.resize(order_);
        for (std::size_t t = 0; t < sub_order_; ++t) {
            const Integer& c = coeffs[dim_ + t];
            if (eisen::is_zero(c)) continue;
            for (std::size_t k = 0; k + 1 < p_; ++k) coeffs[k * sub_order_ + t] -= c;
        }
    }
    coeffs.resize(dim_);
    return coeffs;
}

FieldRef make_cyclotomic_field(unsigned long p, unsigned n) { return std::make_shared<const CyclotomicField>(p, n); }

CycElt::CycElt(FieldRef field) : field_(std::move(field)), num_(field_->dim()), den_(1) {}

CycElt::CycElt(FieldRef field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void CycElt::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        if (!eisen::is_zero(v)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 1) return;
    for (auto& v : num_)
        if (!eisen::is_zero(v)) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycElt CycElt::from_rational(FieldRef field, const Rational& value) {
    std::vector<Integer> num(field->dim());
    num[0] = value.get_num();
    return CycElt(std::move(field), std::move(num), value.get_den());
}

CycElt CycElt::zeta_power(FieldRef field, std::size_t e) {
    std::vector<Integer> num(field->order());
    num[e % field->order()] = 1;
    num = field->reduce(std::move(num));
    return CycElt(std::move(field), std::move(num), Integer(1));
}

CycElt CycElt::from_coords(FieldRef field, const std::vector<Rational>& coords) {
    if (coords.size() > field->dim()) throw ParameterError("from_coords: too many coordinates");
    Integer den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num(field->dim());
    for (std::size_t k = 0; k < coords.size(); ++k) num[k] = coords[k].get_num() * (den / coords[k].get_den());
    return CycElt(std::move(field), std::move(num), std::move(den));
}

std::vector<Rational> CycElt::coords() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& v : num_) {
        Rational r(v, den_);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

bool CycElt::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& v) { return eisen::is_zero(v); });
}

namespace {
void require_same_field(const CycElt& a, const CycElt& b) {
    if (!a.field() || !b.field() || (a.field() != b.field() && (a.field()->p() != b.field()->p() ||
                                                               a.field()->n() != b.field()->n())))
        throw ParameterError("elements of different cyclotomic fields");
}
}  // namespace

bool operator==(const CycElt& a, const CycElt& b) {
    require_same_field(a, b);
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycElt operator+(const CycElt& a, const CycElt& b) {
    require_same_field(a, b);
    if (a.den_ == b.den_) {
        std::vector<Integer> num(a.num_.size());
        for (std::size_t k = 0; k < num.size(); ++k) num[k] = a.num_[k] + b.num_[k];
        return CycElt(a.field_, std::move(num), a.den_);
    }
    std::vector<Integer> num(a.num_.size());
    for (std::size_t k = 0; k < num.size(); ++k) num[k] = a.num_[k] * b.den_ + b.num_[k] * a.den_;
    return CycElt(a.field_, std::move(num), a.den_ * b.den_);
}

CycElt CycElt::operator-() const {
    std::vector<Integer> num(num_.size());
    for (std::size_t k = 0; k < num.size(); ++k) num[k] = -num_[k];
    return CycElt(field_, std::move(num), den_);
}

CycElt operator-(const CycElt& a, const CycElt& b) { return a + (-b); }

CycElt operator*(const CycElt& a, const CycElt& b) {
    require_same_field(a, b);
    const std::size_t d = a.num_.size();
    std::vector<Integer> raw(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        const Integer& x = a.num_[i];
        if (eisen::is_zero(x)) continue;
        for (std::size_t j = 0; j < d; ++j) {
            const Integer& y = b.num_[j];
            if (eisen::is_zero(y)) continue;
            mpz_addmul(raw[i + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
    }
    return CycElt(a.field_, a.field_->reduce(std::move(raw)), a.den_ * b.den_);
}

CycElt CycElt::scaled(const Rational& s) const {
    std::vector<Integer> num(num_.size());
    for (std::size_t k = 0; k < num.size(); ++k) num[k] = num_[k] * s.get_num();
    return CycElt(field_, std::move(num), den_ * s.get_den());
}

CycElt pow(const CycElt& x, unsigned long e) {
    CycElt result = CycElt::from_rational(x.field(), Rational(1));
    CycElt b = x;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

long theta_valuation(const CycElt& x) {
    if (x.is_zero()) throw InfiniteValuation();
    const auto& f = *x.field();
    // Taylor shift: Σ a_k (θ+1)^k = Σ b_k θ^k.
    std::vector<Integer> b = x.numerators();
    const std::size_t d = b.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t k = d - 1; k > i; --k) b[k - 1] += b[k];
    const long dim = static_cast<long>(f.dim());
    long best = std::numeric_limits<long>::max();
    for (std::size_t k = 0; k < d; ++k) {
        if (eisen::is_zero(b[k])) continue;
        best = std::min(best, dim * valuation(b[k], f.p()) + static_cast<long>(k));
    }
    return best - dim * valuation(x.denominator(), f.p());
}

long theta_valuation_via_resultant(const CycElt& x) {
    if (x.is_zero()) throw InfiniteValuation();
    std::vector<Rational> mod;
    for (const auto& c : x.field()->modulus().coeffs()) mod.emplace_back(c);
    const Rational res = resultant(DensePoly<Rational>(std::move(mod)), DensePoly<Rational>(x.coords()));
    return valuation(res, x.field()->p());
}

}  // namespace eisen
