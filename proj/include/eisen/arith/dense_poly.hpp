#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisen/arith/integer.hpp"
#include "eisen/errors.hpp"

namespace eisen {

/// What a coefficient ring must provide. The default-constructed value is zero;
/// `one_like(a)` returns the unit of the ring `a` lives in (rings may carry context).
template <class C>
concept CoefficientRing = std::default_initializable<C> && std::equality_comparable<C> &&
    requires(const C& a, const C& b, long k) {
        C(a + b);
        C(a - b);
        C(a * b);
        C(-a);
        { is_zero(a) } -> std::convertible_to<bool>;
        { one_like(a) } -> std::convertible_to<C>;
        { times_int(a, k) } -> std::convertible_to<C>;
    };

namespace detail {
// Free function so the member DensePoly::is_zero does not hide the ring's is_zero.
template <class C>
bool coeff_is_zero(const C& x) {
    return is_zero(x);
}
}  // namespace detail

/// acc += a * b. Rings with a cheaper in-place form overload this.
template <class C>
void mul_add(C& acc, const C& a, const C& b) {
    acc += a * b;
}

/// Dense univariate polynomial, coefficient i multiplies X^i. Canonical form has no
/// trailing zeros; the zero polynomial is the empty sequence.
template <CoefficientRing C>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
    DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

    static DensePoly constant(C c) { return DensePoly(std::vector<C>{std::move(c)}); }

    static DensePoly monomial(C c, std::size_t k) {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return DensePoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const C& lc() const { return c_.back(); }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
    std::span<const C> coeffs() const { return c_; }

    /// Mutable access for builders; call normalize() afterwards.
    std::vector<C>& raw() { return c_; }
    void normalize() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    DensePoly operator-() const {
        std::vector<C> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.emplace_back(-x);
        return DensePoly(std::move(v));
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = C(c_[i] + o.c_[i]);
        normalize();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = C(c_[i] - o.c_[i]);
        normalize();
        return *this;
    }
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (detail::coeff_is_zero(b.c_[j])) continue;
                mul_add(v[i + j], a.c_[i], b.c_[j]);
            }
        }
        return DensePoly(std::move(v));
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly scaled(const C& s) const {
        std::vector<C> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.emplace_back(x * s);
        return DensePoly(std::move(v));
    }

    /// Multiplication by X^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> v(k);
        v.insert(v.end(), c_.begin(), c_.end());
        return DensePoly(std::move(v));
    }

    DensePoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<C> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v.emplace_back(times_int(c_[i], static_cast<long>(i)));
        return DensePoly(std::move(v));
    }

    /// Horner evaluation at a coefficient-ring point.
    C evaluate(const C& x) const {
        C acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = C(acc * x + c_[i]);
        return acc;
    }

    /// this(inner(X)).
    DensePoly compose(const DensePoly& inner) const {
        DensePoly acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner;
            acc += DensePoly::constant(c_[i]);
        }
        return acc;
    }

private:
    std::vector<C> c_;
};

template <CoefficientRing C>
DensePoly<C> pow(const DensePoly<C>& base, unsigned long e) {
    if (base.is_zero()) {
        if (e == 0) throw ParameterError("pow: 0^0");
        return {};
    }
    DensePoly<C> result = DensePoly<C>::constant(one_like(base.lc()));
    DensePoly<C> b = base;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

/// Quotient and remainder by a monic divisor (valid over any ring).
template <CoefficientRing C>
std::pair<DensePoly<C>, DensePoly<C>> divrem_monic(const DensePoly<C>& a, const DensePoly<C>& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    if (!(b.lc() == one_like(b.lc()))) throw ParameterError("divrem_monic: divisor is not monic");
    const long db = b.degree();
    if (a.degree() < db) return {DensePoly<C>{}, a};
    std::vector<C> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1));
    const auto bc = b.coeffs();
    for (long k = a.degree(); k >= db; --k) {
        const C t = r[static_cast<std::size_t>(k)];
        if (is_zero(t)) continue;
        q[static_cast<std::size_t>(k - db)] = t;
        for (long i = 0; i < db; ++i) {
            if (is_zero(bc[static_cast<std::size_t>(i)])) continue;
            auto& slot = r[static_cast<std::size_t>(k - db + i)];
            slot = C(slot - t * bc[static_cast<std::size_t>(i)]);
        }
        r[static_cast<std::size_t>(k)] = C{};
    }
    r.resize(static_cast<std::size_t>(db));
    return {DensePoly<C>(std::move(q)), DensePoly<C>(std::move(r))};
}

/// q with a = q*b; throws InexactDivision otherwise. Works over integral domains
/// whose `exact_div` is defined (every long-division step is then exact).
template <CoefficientRing C>
DensePoly<C> exact_divide(const DensePoly<C>& a, const DensePoly<C>& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    if (a.is_zero()) return {};
    const long db = b.degree();
    if (a.degree() < db) throw InexactDivision();
    std::vector<C> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1));
    const auto bc = b.coeffs();
    for (long k = a.degree(); k >= db; --k) {
        const C& top = r[static_cast<std::size_t>(k)];
        if (is_zero(top)) continue;
        C t = exact_div(top, b.lc());
        for (long i = 0; i <= db; ++i) {
            if (is_zero(bc[static_cast<std::size_t>(i)])) continue;
            auto& slot = r[static_cast<std::size_t>(k - db + i)];
            slot = C(slot - t * bc[static_cast<std::size_t>(i)]);
        }
        q[static_cast<std::size_t>(k - db)] = std::move(t);
    }
    for (long i = 0; i < db; ++i)
        if (!is_zero(r[static_cast<std::size_t>(i)])) throw InexactDivision();
    return DensePoly<C>(std::move(q));
}

/// Quotient and remainder over a field (coefficients provide `inverse`).
template <CoefficientRing C>
std::pair<DensePoly<C>, DensePoly<C>> divrem(const DensePoly<C>& a, const DensePoly<C>& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    const C inv = inverse(b.lc());
    const DensePoly<C> monic = b.scaled(inv);
    auto [q, r] = divrem_monic(a, monic);
    return {q.scaled(inv), std::move(r)};
}

/// c^e in the coefficient ring; c^0 is one_like(c).
template <CoefficientRing C>
C power(const C& c, unsigned long e) {
    C result = one_like(c);
    C b = c;
    while (e) {
        if (e & 1) result = C(result * b);
        e >>= 1;
        if (e) b = C(b * b);
    }
    return result;
}

// Polynomials are themselves a coefficient ring (nested bivariate polynomials).
template <CoefficientRing C>
bool is_zero(const DensePoly<C>& a) {
    return a.is_zero();
}
template <CoefficientRing C>
DensePoly<C> one_like(const DensePoly<C>& a) {
    return DensePoly<C>::constant(one_like(a.is_zero() ? C{} : a.lc()));
}
template <CoefficientRing C>
DensePoly<C> exact_div(const DensePoly<C>& a, const DensePoly<C>& b) {
    return exact_divide(a, b);
}
template <CoefficientRing C>
std::size_t pivot_score(const DensePoly<C>& a) {
    return a.size();
}
template <CoefficientRing C>
DensePoly<C> times_int(const DensePoly<C>& a, long k) {
    std::vector<C> v;
    v.reserve(a.size());
    for (const auto& x : a.coeffs()) v.emplace_back(times_int(x, k));
    return DensePoly<C>(std::move(v));
}

/// Human-readable form in descending powers, e.g. "X^3 - 6*X^2 + 9*X - 3".
template <CoefficientRing C>
std::string to_string(const DensePoly<C>& a, const std::string& var = "X") {
    if (a.is_zero()) return "0";
    std::string out;
    for (long k = a.degree(); k >= 0; --k) {
        const C& c = a.coeffs()[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        std::string cs = to_string(c);
        bool negative = false;
        const bool compound = cs.find_first_of("+ ", 1) != std::string::npos;
        if (!compound && cs.front() == '-') {
            negative = true;
            cs.erase(0, 1);
        } else if (compound) {
            cs = "(" + cs + ")";
        }
        std::string term;
        if (k == 0) {
            term = cs;
        } else {
            const std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
            term = cs == "1" ? mono : cs + "*" + mono;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace eisen
