#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "eisen/arith/dense_poly.hpp"
#include "eisen/arith/integer.hpp"

namespace eisen {

/// Q(ζ_{p^n}) in the power basis ζ^0 … ζ^{dim-1}, modulus Φ_{p^n}(X).
class CyclotomicField {
public:
    CyclotomicField(unsigned long p, unsigned n);

    unsigned long p() const { return p_; }
    unsigned n() const { return n_; }
    /// p^n.
    std::size_t order() const { return order_; }
    /// p^{n-1}.
    std::size_t sub_order() const { return sub_order_; }
    /// p^{n-1}(p-1).
    std::size_t dim() const { return dim_; }
    const DensePoly<Integer>& modulus() const { return modulus_; }

    /// Reduces a coefficient vector of any length modulo Φ_{p^n}; result has length dim.
    std::vector<Integer> reduce(std::vector<Integer> coeffs) const;

private:
    unsigned long p_;
    unsigned n_;
    std::size_t order_;
    std::size_t sub_order_;
    std::size_t dim_;
    DensePoly<Integer> modulus_;
};

using FieldRef = std::shared_ptr<const CyclotomicField>;

FieldRef make_cyclotomic_field(unsigned long p, unsigned n);

/// Element of Q(ζ_{p^n}) stored as integer numerators over one positive common
/// denominator, kept in lowest terms (gcd of all numerators and denominator is 1).
class CycElt {
public:
    CycElt() = default;
    explicit CycElt(FieldRef field);

    static CycElt from_rational(FieldRef field, const Rational& value);
    /// ζ^e for any e >= 0.
    static CycElt zeta_power(FieldRef field, std::size_t e);
    /// Element with the given coordinates (length <= dim, further entries are zero).
    static CycElt from_coords(FieldRef field, const std::vector<Rational>& coords);

    const FieldRef& field() const { return field_; }
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }
    std::vector<Rational> coords() const;
    bool is_zero() const;

    friend bool operator==(const CycElt& a, const CycElt& b);
    friend CycElt operator+(const CycElt& a, const CycElt& b);
    friend CycElt operator-(const CycElt& a, const CycElt& b);
    friend CycElt operator*(const CycElt& a, const CycElt& b);
    CycElt operator-() const;
    CycElt scaled(const Rational& s) const;

private:
    CycElt(FieldRef field, std::vector<Integer> num, Integer den);
    void canonicalize();

    FieldRef field_;
    std::vector<Integer> num_;
    Integer den_ = 1;
};

CycElt pow(const CycElt& x, unsigned long e);

/// v_{θ_n}(x) with θ_n = ζ - 1: coordinates are rewritten in the θ basis b_k, then
/// v = min_k (dim·v_p(b_k) + k) because Φ_{p^n}(θ+1) is Eisenstein. Throws InfiniteValuation for 0.
long theta_valuation(const CycElt& x);

/// v_p(Res_T(Φ_{p^n}(T), x̃(T))), the norm route; equals theta_valuation(x).
long theta_valuation_via_resultant(const CycElt& x);

}  // namespace eisen
