#pragma once

#include "eisen/arith/dense_poly.hpp"
#include "eisen/arith/integer.hpp"
#include "eisen/report.hpp"

namespace eisen {

using IntPoly = DensePoly<Integer>;
/// Z[X][Y]: polynomials in Y whose coefficients are polynomials in X.
using BivariatePoly = DensePoly<IntPoly>;

/// Φ_{p^n}(X+1) = Σ d_{n,j} X^j. Monic of degree p^{n-1}(p-1), Eisenstein at p.
struct ShiftedCyclotomic {
    unsigned long p = 0;
    unsigned n = 0;
    IntPoly poly;

    long degree() const { return poly.degree(); }
    /// d_{n,j}; zero outside [0, degree].
    Integer d(long j) const { return j < 0 ? Integer(0) : poly.coeff(static_cast<std::size_t>(j)); }
};

/// Φ_{p^n}(X) = Σ_{k<p} X^{k p^{n-1}}.
IntPoly cyclotomic_prime_power(unsigned long p, unsigned n);

/// Throws ParameterError unless p is an odd prime and n >= 1.
ShiftedCyclotomic phi_shifted(unsigned long p, unsigned n);

/// True iff every non-leading coefficient is divisible by p, the constant term is not
/// divisible by p^2, and the polynomial is monic.
bool is_eisenstein(const IntPoly& poly, unsigned long p);

/// Per-index divisibility of d_{n,j} (resp. d_{n,j} - d_{n-1,j/p} when p | j) by p^n
/// for j <= p^{n-1}(p-2) and by p^{n-1} above. Requires n >= 2.
CheckReport check_congruence_I(unsigned long p, unsigned n);

/// Φ_{p^n}(X+1) - Φ_{p^{n-1}}(X^p+1) ≡ X^{p^{n-1}(p-2)}((X^p+1)^{p^{n-2}} - (X+1)^{p^{n-1}}) mod p^n,
/// and F_n(X) ≡ F_{n-1}(X^p) mod p^n with F_n(X) = Φ_{p^n}(X+1) + X^{p^n-2p^{n-1}}(X+1)^{p^{n-1}}.
CheckReport check_congruence_II(unsigned long p, unsigned n);

struct BinomialBounds {
    unsigned k_max = 10;
    unsigned alpha_max = 2;
    unsigned beta_max = 2;
};

/// Ideal-membership checks in Z[X,Y]:
///   (X+pY)^k - X^k - kX^{k-1}pY ∈ (k[p] p^2 Y^2)   and   (X+pY)^k - X^k ∈ (k[p] p Y)  for 1 <= k <= k_max,
///   (X+Y)^{p^{β+α}} - (X^{p^β}+Y^{p^β})^{p^α} ∈ (p^{α+1})                           for α, β within bounds,
/// where k[p] is the p-part of k.
CheckReport check_binomial_congruences(unsigned long p, const BinomialBounds& bounds);

}  // namespace eisen
