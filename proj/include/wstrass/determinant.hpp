#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wstrass {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }

/// Pivot preference for elimination; lower is better. Power series override
/// this with their valuation so that the smallest-order entry is used.
template <class T>
int pivot_cost(const T&) {
    return 0;
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) determinant over an integral domain T. Every
/// division performed is exact in T, so T only needs +, -, * and an exact
/// operator/ (for a field, ordinary division). Rows are pivoted; entries of
/// the input matrix are consumed.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0)
        throw DomainError("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n)
            throw DomainError("determinant of a non-square matrix");

    bool negate = false;
    T prev{};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        int best_cost = 0;
        for (std::size_t r = k; r < n; ++r) {
            if (is_zero(m[r][k]))
                continue;
            int c = pivot_cost(m[r][k]);
            if (best == n || c < best_cost) {
                best = r;
                best_cost = c;
            }
        }
        if (best == n)
            return m[k][k] - m[k][k];
        if (best != k) {
            std::swap(m[best], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(v) : T(v / prev);
            }
        }
        prev = m[k][k];
    }
    T det = std::move(m[n - 1][n - 1]);
    if (negate)
        det = -det;
    return det;
}

} // namespace wstrass
