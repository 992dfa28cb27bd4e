#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eisen/arith/dense_poly.hpp"
#include "eisen/caps.hpp"
#include "eisen/carlitz/galois_field.hpp"
#include "eisen/carlitz/poly_fr.hpp"

namespace eisen {

/// Largest θ-level dimension the mod-f^K route accepts.
inline constexpr std::size_t kAdicDimensionCap = 1000;

/// F_r with r = p^ρ, a monic irreducible f ∈ F_r[Y], q = r^{deg f}.
struct CarlitzParams {
    const GaloisField* field = nullptr;
    PolyFr f;
    std::size_t q = 0;

    unsigned long p() const { return field->p(); }
    unsigned rho() const { return field->rho(); }
    unsigned long r() const { return field->size(); }
    /// (q-1) q^{n-1}, the degree of Ψ_{f^n}; throws CapExceeded on overflow.
    std::size_t level_dim(unsigned n) const;
    /// q^k; throws CapExceeded on overflow.
    std::size_t q_pow(unsigned k) const;
    std::string label() const;
};

/// Validates p odd prime, ρ >= 1, r <= 256, f monic irreducible of positive degree.
CarlitzParams make_carlitz_params(const GaloisField& field, const PolyFr& f);
CarlitzParams make_carlitz_params(unsigned long p, unsigned rho, const std::string& f_codes,
                                  const std::vector<unsigned>& fr_modulus = {});

/// Σ_k coeffs[k] X^{r^k}; the zero map has no coefficients.
struct AdditivePoly {
    std::vector<PolyFr> coeffs;

    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) { return a.coeffs == b.coeffs; }
    /// Dense form in X (degree r^{top}).
    DensePoly<PolyFr> to_dense(unsigned long r) const;
};

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b);
/// a ∘ b = Σ a_k b_l(Y^{r^k}) X^{r^{k+l}}.
AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b, unsigned long r);
/// P_e, built from P_{Y^{i+1}} = Y P_{Y^i} + (P_{Y^i})^r by F_r-linearity in e.
AdditivePoly carlitz_poly(const CarlitzParams& params, const PolyFr& e);
std::string to_string(const AdditivePoly& a, unsigned long r);

/// Ψ_{f^n} = P_{f^n} / P_{f^{n-1}}; asserts the Eisenstein shape at f and Ψ(0) = f.
DensePoly<PolyFr> psi_poly(const CarlitzParams& params, unsigned n);

/// F_r(Y)[X]/Ψ_{f^n}(X), with θ_n the class of X.
class ThetaField {
public:
    ThetaField(CarlitzParams params, unsigned n);

    const CarlitzParams& params() const { return params_; }
    unsigned n() const { return n_; }
    std::size_t dim() const { return dim_; }
    const DensePoly<PolyFr>& psi() const { return psi_; }
    /// Indices i < dim with Ψ_i != 0.
    const std::vector<std::size_t>& psi_support() const { return support_; }
    /// f^n.
    const PolyFr& exponent_modulus() const { return fn_; }

private:
    CarlitzParams params_;
    unsigned n_;
    std::size_t dim_;
    DensePoly<PolyFr> psi_;
    std::vector<std::size_t> support_;
    PolyFr fn_;
};

using ThetaFieldRef = std::shared_ptr<const ThetaField>;
ThetaFieldRef make_theta_field(const CarlitzParams& params, unsigned n);

/// Σ_k (num[k]/den) θ^k with den monic and gcd(den, all num) = 1.
class ThetaElt {
public:
    explicit ThetaElt(ThetaFieldRef field);
    ThetaElt(ThetaFieldRef field, std::vector<PolyFr> num, PolyFr den);

    static ThetaElt one(const ThetaFieldRef& field);
    static ThetaElt theta(const ThetaFieldRef& field);
    static ThetaElt scalar(const ThetaFieldRef& field, const RatFunc& c);

    const ThetaFieldRef& field() const { return field_; }
    const std::vector<PolyFr>& numerators() const { return num_; }
    const PolyFr& denominator() const { return den_; }
    RatFunc coord(std::size_t k) const;
    std::vector<RatFunc> coords() const;
    bool is_zero() const;
    bool is_integral() const { return den_.degree() == 0; }

    friend bool operator==(const ThetaElt& a, const ThetaElt& b);
    friend ThetaElt operator+(const ThetaElt& a, const ThetaElt& b);
    friend ThetaElt operator-(const ThetaElt& a, const ThetaElt& b);
    friend ThetaElt operator*(const ThetaElt& a, const ThetaElt& b);
    ThetaElt operator-() const;

    ThetaElt scaled(const RatFunc& c) const;
    /// x^r.
    ThetaElt frobenius() const;
    ThetaElt pow(unsigned long e) const;

private:
    void normalize();
    ThetaFieldRef field_;
    std::vector<PolyFr> num_;
    PolyFr den_;
};

/// Evaluates a polynomial with F_r(Y)-coefficients (given as F_r[Y]) at x.
ThetaElt evaluate(const DensePoly<PolyFr>& poly, const ThetaElt& x);

/// x^e = P_{e mod f^n}(x) in Ƒ_n.
ThetaElt module_power(const ThetaElt& x, const PolyFr& e);

/// ϖ_n = ∏_{c} θ_n^{c^{q^{n-1}}} over nonzero c with deg c < deg f.
ThetaElt compute_varpi(const ThetaFieldRef& field);
/// ϖ_m inside Ƒ_n (m <= n), via θ_m = θ_n^{f^{n-m}}.
ThetaElt varpi_in_field(const ThetaFieldRef& field, unsigned m);

/// v_{θ_n}(x) = min_k(dim v_f(b_k) + k) - dim v_f(den); Ψ is Eisenstein at f.
/// Throws InfiniteValuation for x = 0.
long f_valuation(const ThetaElt& x);
/// Same value from v_f(Res_X(Ψ, num)) - dim v_f(den); used as an oracle.
long f_valuation_via_resultant(const ThetaElt& x);

/// μ_{ϖ_{m+i}, Ę_m}(X) = Σ_j a_{i,j} X^j with a_{i,j} = Σ_k coeffs[j][k] ϖ_m^k, k < q^{m-1}.
/// With `precision` = K the coefficients are only known modulo f^K.
struct RelMinPolyFF {
    CarlitzParams params;
    unsigned m = 1;
    unsigned i = 1;
    std::vector<std::vector<RatFunc>> coeffs;
    std::optional<unsigned> precision;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Exact relation over F_r(Y); throws CapExceeded when (q-1) q^{m+i-1} exceeds the cap.
RelMinPolyFF minpoly_rel_ff(const CarlitzParams& params, unsigned m, unsigned i,
                            std::size_t cap = kDefaultDimensionCap);
/// The same relation with coefficients reduced modulo f^K, computed in (F_r[Y]/f^K)[θ].
RelMinPolyFF minpoly_rel_ff_adic(const CarlitzParams& params, unsigned m, unsigned i, unsigned precision,
                                 std::size_t cap = kAdicDimensionCap);

/// v_{ϖ_m} of a base element. `value` nullopt means the element is exactly zero;
/// `at_least` marks a lower bound (all coordinates vanish modulo the working precision).
struct BaseValuationFF {
    std::optional<long> value;
    bool at_least = false;

    bool is_at_least(long bound) const { return !value || *value >= bound; }
    bool equals(long v) const { return value && !at_least && *value == v; }
};

/// min_k(q^{m-1} v_f(c_k) + k); valid because ϖ_m is Eisenstein of degree q^{m-1} over F_r[Y]_(f).
BaseValuationFF base_valuation_direct(const CarlitzParams& params, unsigned m, const std::vector<RatFunc>& a,
                                      std::optional<unsigned> precision = std::nullopt);
std::string to_string(const BaseValuationFF& v);

/// v_{ϖ_m}(a) = v_{θ_m}(a)/(q-1) computed in Ƒ_m, integrality asserted.
class BaseValuatorFF {
public:
    BaseValuatorFF(const CarlitzParams& params, unsigned m);
    BaseValuationFF operator()(const std::vector<RatFunc>& a) const;
    /// Σ_k a_k ϖ_m^k as an element of Ƒ_m.
    ThetaElt evaluate(const std::vector<RatFunc>& a) const;

private:
    CarlitzParams params_;
    unsigned m_;
    ThetaFieldRef field_;
    std::vector<ThetaElt> powers_;
};

}  // namespace eisen
