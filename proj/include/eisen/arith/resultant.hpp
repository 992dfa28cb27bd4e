#pragma once

#include <cstddef>
#include <vector>

#include "eisen/arith/dense_poly.hpp"
#include "eisen/arith/linear_system.hpp"
#include "eisen/errors.hpp"

namespace eisen {

/// Res_X(a, b) over a field by the Euclidean remainder sequence:
/// Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r) with r = a mod b.
template <CoefficientRing F>
F resultant(DensePoly<F> a, DensePoly<F> b) {
    if (a.is_zero() && b.is_zero()) throw ParameterError("resultant: both inputs are zero");
    if (a.is_zero()) return F{};
    if (b.is_zero()) return F{};
    F acc = one_like(a.lc());
    while (true) {
        const long m = a.degree(), n = b.degree();
        if (n == 0) return F(acc * power(b.lc(), static_cast<unsigned long>(m)));
        if (m == 0) return F(acc * power(a.lc(), static_cast<unsigned long>(n)));
        auto rem = divrem(a, b).second;
        if (rem.is_zero()) return F{};
        if ((m * n) % 2 == 1) acc = F(-acc);
        acc = F(acc * power(b.lc(), static_cast<unsigned long>(m - rem.degree())));
        a = std::move(b);
        b = std::move(rem);
    }
}

/// Sylvester matrix of a (degree m) and b (degree n), size (m+n) x (m+n), row-major.
template <CoefficientRing R>
std::vector<R> sylvester_matrix(const DensePoly<R>& a, const DensePoly<R>& b) {
    const std::size_t m = static_cast<std::size_t>(a.degree());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    const std::size_t s = m + n;
    std::vector<R> mat(s * s);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) mat[row * s + row + k] = a.coeffs()[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) mat[(n + row) * s + row + k] = b.coeffs()[n - k];
    return mat;
}

/// Res_X(a, b) over an integral domain: Bareiss determinant of the Sylvester matrix.
template <CoefficientRing R>
R resultant_domain(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (a.is_zero() && b.is_zero()) throw ParameterError("resultant: both inputs are zero");
    if (a.is_zero() || b.is_zero()) return R{};
    if (a.degree() == 0) return power(a.lc(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return power(b.lc(), static_cast<unsigned long>(a.degree()));
    const std::size_t s = static_cast<std::size_t>(a.degree() + b.degree());
    return determinant_fraction_free(sylvester_matrix(a, b), s, one_like(a.lc()));
}

}  // namespace eisen
