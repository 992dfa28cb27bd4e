#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eisen/errors.hpp"

namespace eisen {

/// Dense system A x = b, A stored row-major.
template <class F>
struct LinearSystem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<F> matrix;
    std::vector<F> rhs;

    LinearSystem() = default;
    LinearSystem(std::size_t r, std::size_t c) : rows(r), cols(c), matrix(r * c), rhs(r) {}

    F& at(std::size_t r, std::size_t c) { return matrix[r * cols + c]; }
    const F& at(std::size_t r, std::size_t c) const { return matrix[r * cols + c]; }

    void validate() const {
        if (matrix.size() != rows * cols || rhs.size() != rows)
            throw ParameterError("linear system: inconsistent dimensions");
    }
};

/// Solution of a system over an integral domain: x_j = numerators[j] / denominator.
template <class R>
struct FractionFreeSolution {
    std::vector<R> numerators;
    R denominator;
};

namespace detail {

template <class F>
void swap_rows(std::vector<F>& m, std::vector<F>& rhs, std::size_t cols, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m[a * cols + c], m[b * cols + c]);
    std::swap(rhs[a], rhs[b]);
}

}  // namespace detail

/// Which candidate pivot Gaussian elimination prefers, by `pivot_score`.
enum class PivotChoice { Largest, Smallest };

/// Exact Gaussian elimination over a field. Among the candidate pivots of a column the
/// entry with the largest (default) or smallest `pivot_score` is chosen.
/// Throws InconsistentSystem / UnderdeterminedSystem unless the solution is unique.
template <class F>
std::vector<F> solve_unique(const LinearSystem<F>& sys, PivotChoice choice = PivotChoice::Largest) {
    sys.validate();
    const std::size_t rows = sys.rows, cols = sys.cols;
    std::vector<F> m = sys.matrix;
    std::vector<F> b = sys.rhs;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    bool free_column = false;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_score = 0;
        for (std::size_t r = rank; r < rows; ++r) {
            const F& v = m[r * cols + c];
            if (is_zero(v)) continue;
            const std::size_t s = pivot_score(v);
            const bool better = choice == PivotChoice::Largest ? s > best_score : s < best_score;
            if (best == rows || better) {
                best = r;
                best_score = s;
            }
        }
        if (best == rows) {
            free_column = true;
            continue;
        }
        detail::swap_rows(m, b, cols, rank, best);
        const F inv = inverse(m[rank * cols + c]);
        for (std::size_t k = c; k < cols; ++k) m[rank * cols + k] = F(m[rank * cols + k] * inv);
        b[rank] = F(b[rank] * inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const F factor = m[r * cols + c];
            if (is_zero(factor)) continue;
            for (std::size_t k = c; k < cols; ++k) {
                const F& pv = m[rank * cols + k];
                if (is_zero(pv)) continue;
                m[r * cols + k] = F(m[r * cols + k] - factor * pv);
            }
            b[r] = F(b[r] - factor * b[rank]);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < cols) free_column = true;
    for (std::size_t r = rank; r < rows; ++r)
        if (!is_zero(b[r])) throw InconsistentSystem();
    if (free_column) throw UnderdeterminedSystem();

    std::vector<F> x(cols);
    for (std::size_t i = cols; i-- > 0;) {
        F acc = b[i];
        for (std::size_t k = i + 1; k < cols; ++k) {
            const F& v = m[i * cols + k];
            if (!is_zero(v)) acc = F(acc - v * x[k]);
        }
        x[i] = std::move(acc);
    }
    return x;
}

/// Bareiss fraction-free elimination over an integral domain R (rows >= cols).
/// Pivots are the candidates with the smallest `pivot_score`. The returned denominator
/// is the determinant of the selected square minor (up to sign).
template <class R>
FractionFreeSolution<R> solve_fraction_free(const LinearSystem<R>& sys) {
    sys.validate();
    const std::size_t rows = sys.rows, cols = sys.cols;
    std::vector<R> m = sys.matrix;
    std::vector<R> b = sys.rhs;
    std::size_t rank = 0;
    bool free_column = false;
    R prev;
    bool have_prev = false;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_score = 0;
        for (std::size_t r = rank; r < rows; ++r) {
            const R& v = m[r * cols + c];
            if (is_zero(v)) continue;
            const std::size_t s = pivot_score(v);
            if (best == rows || s < best_score) {
                best = r;
                best_score = s;
            }
        }
        if (best == rows) {
            free_column = true;
            continue;
        }
        detail::swap_rows(m, b, cols, rank, best);
        const R piv = m[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const R factor = m[r * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                R v = R(piv * m[r * cols + k] - factor * m[rank * cols + k]);
                m[r * cols + k] = have_prev ? exact_div(v, prev) : std::move(v);
            }
            R v = R(piv * b[r] - factor * b[rank]);
            b[r] = have_prev ? exact_div(v, prev) : std::move(v);
            m[r * cols + c] = R{};
        }
        prev = piv;
        have_prev = true;
        ++rank;
    }
    if (rank < cols) free_column = true;
    for (std::size_t r = rank; r < rows; ++r)
        if (!is_zero(b[r])) throw InconsistentSystem();
    if (free_column) throw UnderdeterminedSystem();

    FractionFreeSolution<R> out;
    out.denominator = prev;
    out.numerators.resize(cols);
    for (std::size_t i = cols; i-- > 0;) {
        R acc = R(prev * b[i]);
        for (std::size_t k = i + 1; k < cols; ++k) {
            const R& v = m[i * cols + k];
            if (!is_zero(v)) acc = R(acc - v * out.numerators[k]);
        }
        out.numerators[i] = exact_div(acc, m[i * cols + i]);
    }
    return out;
}

/// True iff A y = d b holds exactly for the given fraction-free solution.
template <class R>
bool satisfies(const LinearSystem<R>& sys, const FractionFreeSolution<R>& sol) {
    for (std::size_t r = 0; r < sys.rows; ++r) {
        R acc = R(sol.denominator * sys.rhs[r]);
        for (std::size_t c = 0; c < sys.cols; ++c) {
            const R& v = sys.at(r, c);
            if (!is_zero(v)) acc = R(acc - v * sol.numerators[c]);
        }
        if (!is_zero(acc)) return false;
    }
    return true;
}

/// Determinant of a square matrix (row-major) over an integral domain, by Bareiss.
template <class R>
R determinant_fraction_free(std::vector<R> m, std::size_t n, const R& one) {
    if (m.size() != n * n) throw ParameterError("determinant: matrix is not square");
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        std::size_t best_score = 0;
        for (std::size_t r = k; r < n; ++r) {
            const R& v = m[r * n + k];
            if (is_zero(v)) continue;
            const std::size_t s = pivot_score(v);
            if (best == n || s < best_score) {
                best = r;
                best_score = s;
            }
        }
        if (best == n) return R{};
        if (best != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[best * n + c]);
            negate = !negate;
        }
        const R piv = m[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const R factor = m[r * n + k];
            for (std::size_t c = k + 1; c < n; ++c)
                m[r * n + c] = exact_div(R(piv * m[r * n + c] - factor * m[k * n + c]), prev);
            m[r * n + k] = R{};
        }
        prev = piv;
    }
    R det = m[n * n - 1];
    return negate ? R(-det) : det;
}

}  // namespace eisen
