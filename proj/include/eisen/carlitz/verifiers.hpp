#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eisen/caps.hpp"
#include "eisen/carlitz/carlitz.hpp"
#include "eisen/report.hpp"
#include "eisen/tower/pi_tower.hpp"

namespace eisen {

/// j(q-1) < q^i (q-2), decided in integers.
bool below_threshold_ff(const CarlitzParams& params, unsigned i, std::size_t j);
/// Largest α with q^α | j (j >= 1).
unsigned q_adic_order(const CarlitzParams& params, std::size_t j);

/// (i) and (i'): v_{ϖ_m}(a_{i,j}) >= (i - v_q(j)) q^{m-1}, plus one below the threshold.
std::vector<ValuationReport> verify_th11a(const RelMinPolyFF& poly);
std::vector<ValuationReport> verify_th11a(const CarlitzParams& params, unsigned m, unsigned i,
                                          std::size_t cap = kDefaultDimensionCap);

/// (ii) and (ii'): a_{i,j} ≡ a_{i+β, q^β j} modulo f^{i+1} (times ϖ_m below the threshold).
/// Falls back to the mod-f^{i+2} computation when the upper level exceeds `cap`.
CheckReport verify_th11a_cong(const CarlitzParams& params, unsigned m, unsigned i, unsigned beta,
                              std::size_t cap = kDefaultDimensionCap);

/// a_{i,j*} / f^{i-β} is a unit for j* = q^i - (q^i - q^β)/(q-1), β ∈ [0, i-1].
CheckReport verify_cor_diff2(const CarlitzParams& params, unsigned m, unsigned i,
                             std::size_t cap = kDefaultDimensionCap);

/// v_{θ_n}(ϖ_n^q - ϖ_{n-1}) >= v_{θ_n}(ϖ_n^{q-1} f), and θ_n^q ≡ θ_{n-1} mod θ_n f.
CheckReport verify_lem10a(const CarlitzParams& params, unsigned n, std::size_t cap = kDefaultDimensionCap);

/// f = Y only: μ ≡ X^{q^i} + Y X^{(q-1)q^{i-1}} - ϖ_m modulo Y^2.
CheckReport verify_cor_bu(const CarlitzParams& params, unsigned m, unsigned i,
                          std::size_t cap = kDefaultDimensionCap);

/// f = Y only: μ_{ϖ_{m+1}, Ę_m} = -ϖ_m + Σ_{j=1}^{q} Y^{q-j} X^j exactly.
CheckReport verify_car11(const CarlitzParams& params, unsigned m, std::size_t cap = kDefaultDimensionCap);

/// Disc(Ψ_{f^n}) = c f^{q^{n-1}(nq-n-1)} with c ∈ F_r^*; refuses dimensions above `cap`.
CheckReport discriminant_check(const CarlitzParams& params, unsigned n, std::size_t cap = 100);

/// Per-index verdict of the experimental digit conjecture for f = Y.
struct ConjectureVerdict {
    std::size_t j = 0;
    /// Base-q digits of q^i - j, low to high.
    std::vector<std::size_t> digits;
    bool cond_decreasing = false;
    bool cond_p_order = false;
    bool predicted_zero = false;
    long predicted_v = 0;
    /// nullopt: the coefficient is zero.
    std::optional<long> actual_v;
    bool match = false;
};

struct ConjectureScan {
    std::string params;
    unsigned m = 1;
    unsigned i = 1;
    std::vector<ConjectureVerdict> verdicts;
    std::size_t mismatches = 0;

    bool all_match() const { return mismatches == 0; }
};

ConjectureScan conjecture_scan(const CarlitzParams& params, unsigned m, unsigned i,
                               std::size_t cap = kDefaultDimensionCap);

}  // namespace eisen
