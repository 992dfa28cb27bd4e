#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eisen/arith/integer.hpp"

namespace eisen {

/// Residues modulo p^N.
struct PadicRing {
    unsigned long p = 0;
    unsigned precision = 0;
    Integer modulus;
};

/// xi[j-1] = ξ(j), the (p-1)st root of unity in Z_p congruent to j, modulo p^N.
struct TeichmullerSet {
    PadicRing ring;
    std::vector<Integer> xi;
};

TeichmullerSet teichmuller(unsigned long p, unsigned precision);

enum class SumStrategy { Auto, Direct, Mitm };

std::string to_string(SumStrategy s);
SumStrategy parse_strategy(const std::string& text);

struct SubsetSumOptions {
    SumStrategy strategy = SumStrategy::Auto;
    unsigned workers = 1;
    /// Largest p-1 accepted by each strategy.
    unsigned direct_cap = 26;
    unsigned mitm_cap = 44;
};

/// s_0 … s_{n_max}; n_bound = N(p) = 1 + max finite v_p of a subset sum;
/// n0 = N_0(p), the index from which s is stationary, when n0 <= n_max.
struct SubsetSumTally {
    unsigned long p = 0;
    std::vector<Integer> s;
    std::optional<unsigned> n0;
    unsigned n_bound = 0;
    SumStrategy strategy = SumStrategy::Auto;
};

/// Throws CapExceeded when the chosen strategy's cap is exceeded, InternalError when a
/// normalized count is not an integer or s_1 != 1.
SubsetSumTally s_sequence(unsigned long p, unsigned n_max, const SubsetSumOptions& options = {});

/// floor(φ(p-1)(1 - log π / log p) + 1), certified by outward-rounded interval arithmetic.
/// Throws ParameterError for p < 5.
long n_upper_bound(unsigned long p);

struct TraceRecord {
    unsigned long p = 0;
    unsigned n = 0;
    Integer trace;
};

/// Tr_{E_n|Q}(π_n) = p^n s_n - p^{n-1} s_{n-1}; for n = 2 also asserts ≡ -p mod p^2.
TraceRecord trace_via_s(unsigned long p, unsigned n, const SubsetSumOptions& options = {});

struct ModulusCheck {
    unsigned long p = 0;
    long double max_modulus = 0;
    long double expected = 0;
    long double relative_error = 0;
    bool passed = false;
};

/// max |Σ_{ξ∈H} ξ| over subsets H of the complex (p-1)st roots of unity versus 1/sin(π/(p-1)).
ModulusCheck max_sum_modulus_check(unsigned long p, long double tolerance = 1e-9L);

}  // namespace eisen
