#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eisen/arith/integer.hpp"
#include "eisen/caps.hpp"
#include "eisen/report.hpp"
#include "eisen/tower/cyclotomic_field.hpp"

namespace eisen {

/// (p, m, i, β) for the extension E_{m+i} | E_m; the relative degree is p^i.
struct TowerParams {
    unsigned long p = 3;
    unsigned m = 1;
    unsigned i = 1;
    unsigned beta = 0;

    std::size_t degree() const;
    /// p^{m-1}, the ramification index of E_m over Q.
    std::size_t base_index() const;
    /// True iff j < p^i (p-2)/(p-1), decided in integers.
    bool below_threshold(std::size_t j) const;
    /// p^{m+i-1}(p-1), the dimension of the ambient cyclotomic field.
    std::size_t ambient_dim() const;
    void validate() const;
};

/// Element of E_m written as Σ_k c_k π_m^k, k < p^{m-1}.
using BaseElt = std::vector<Rational>;

/// μ_{π_{m+i}, E_m}(X) = Σ_j a_{i,j} X^j, coeffs[j] = a_{i,j}.
struct RelMinPoly {
    TowerParams params;
    std::vector<BaseElt> coeffs;
};

struct ValuationReport {
    std::size_t j = 0;
    /// Valuation at π_m; nullopt encodes +∞ (zero coefficient).
    std::optional<long> v;
    long bound = 0;
    bool exact = false;
    bool passed = false;
};

/// e_j = j^{p^{n-1}} mod p^n.
std::size_t teich_exponent(unsigned long p, unsigned n, std::size_t j);

/// π_n = ∏_{j=1}^{p-1} (ζ_{p^n}^{e_j} - 1) in the given field of level n.
CycElt compute_pi(const FieldRef& field);
CycElt compute_pi(unsigned long p, unsigned n);

/// π_m viewed inside the field of level n >= m, using ζ_{p^m} = ζ_{p^n}^{p^{n-m}}.
CycElt pi_in_field(const FieldRef& field, unsigned m);

/// Representation of π_m itself as a BaseElt at level m.
BaseElt base_uniformizer(unsigned long p, unsigned m);

/// Evaluates a BaseElt at π_m inside the given field of level >= m.
CycElt evaluate_base(const FieldRef& field, unsigned m, const BaseElt& a);

/// v_{π_m}(a) = v_{θ_m}(a)/(p-1), with integrality asserted. nullopt for a = 0.
std::optional<long> base_valuation(unsigned long p, unsigned m, const BaseElt& a);

/// Throws CapExceeded when p^{m+i-1}(p-1) exceeds the cap.
RelMinPoly minpoly_rel(const TowerParams& params, std::size_t cap = kDefaultDimensionCap);

std::vector<ValuationReport> verify_th11(const TowerParams& params, const RelMinPoly& poly);
std::vector<ValuationReport> verify_th11(const TowerParams& params, std::size_t cap = kDefaultDimensionCap);

CheckReport verify_th11_cong(const TowerParams& params, std::size_t cap = kDefaultDimensionCap);
CheckReport verify_cor_diff(const TowerParams& params, std::size_t cap = kDefaultDimensionCap);
CheckReport verify_lem10(unsigned long p, unsigned n, std::size_t cap = kDefaultDimensionCap);
CheckReport verify_eis13(unsigned long p, unsigned n, std::size_t cap = kDefaultDimensionCap);

struct ExactnessScan {
    unsigned long p = 0;
    unsigned i = 0;
    std::vector<ValuationReport> reports;
    std::size_t non_exact = 0;
};

/// Classifies every j ∈ [1, p^i - 1] for m = 1.
ExactnessScan exactness_scan(unsigned long p, unsigned i, std::size_t cap = kDefaultDimensionCap);

/// Tr_{E_n|Q}(π_n) read off μ_{π_n,Q} = minpoly_rel(p, 1, n-1), for n >= 2.
Integer trace_from_minpoly(unsigned long p, unsigned n, std::size_t cap = kDefaultDimensionCap);

std::string to_string(const ValuationReport& r);

}  // namespace eisen
