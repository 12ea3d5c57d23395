#pragma once

#include <cstddef>
#include <vector>

#include "determinant.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace wstrass {

// Resultant convention used throughout: Res(p, q) = lc(p)^deg(q) * prod q(a)
// over the roots a of p, which is the determinant of the Sylvester matrix
// with the deg(q) shifted rows of p placed above the deg(p) rows of q.

/// Coefficients in ascending order; the vector length fixes the formal degree.
template <class T>
using CoeffList = std::vector<T>;

/// Rows of the j-th subresultant matrix: (n-j) shifts of p, then (m-j) shifts
/// of q, where m, n are the formal degrees of p and q. Column c holds the
/// coefficient of x^(m+n-j-1-c). j = 0 gives the Sylvester matrix.
template <class T>
Matrix<T> subresultant_rows(const CoeffList<T>& p, const CoeffList<T>& q, std::size_t j) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    const std::size_t cols = m + n - j;
    Matrix<T> rows;
    auto place = [&](const CoeffList<T>& src, std::size_t shift) {
        std::vector<T> row(cols);
        for (std::size_t k = 0; k < src.size(); ++k)
            row[cols - 1 - (k + shift)] = src[k];
        rows.push_back(std::move(row));
    };
    for (std::size_t i = 0; i + j < n; ++i)
        place(p, n - j - 1 - i);
    for (std::size_t i = 0; i + j < m; ++i)
        place(q, m - j - 1 - i);
    return rows;
}

/// Coefficient of x^i in the j-th subresultant polynomial S_j(p, q), i <= j.
/// The principal coefficient psc_j is the case i = j; psc_0 is the resultant.
template <class T>
T subresultant_coefficient(const CoeffList<T>& p, const CoeffList<T>& q, std::size_t j, std::size_t i) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    if (i > j)
        throw DomainError("subresultant coefficient index out of range");
    if (j >= m || j >= n)
        throw DomainError("subresultant index must be below both degrees");
    Matrix<T> rows = subresultant_rows(p, q, j);
    const std::size_t size = m + n - 2 * j;
    const std::size_t cols = m + n - j;
    Matrix<T> sq(size, std::vector<T>(size));
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c + 1 < size; ++c)
            sq[r][c] = rows[r][c];
        sq[r][size - 1] = rows[r][cols - 1 - i];
    }
    return bareiss_determinant(std::move(sq));
}

/// S_j(p, q) as a coefficient list of length j + 1.
template <class T>
CoeffList<T> subresultant(const CoeffList<T>& p, const CoeffList<T>& q, std::size_t j) {
    CoeffList<T> out;
    for (std::size_t i = 0; i <= j; ++i)
        out.push_back(subresultant_coefficient(p, q, j, i));
    return out;
}

template <class T>
T sylvester_resultant(const CoeffList<T>& p, const CoeffList<T>& q) {
    if (p.size() < 2 || q.size() < 2)
        throw DomainError("Sylvester resultant needs both formal degrees >= 1");
    return bareiss_determinant(subresultant_rows(p, q, 0));
}

/// Resultant over the rationals, computed by fraction-free elimination on
/// the integer primitive parts and rescaled by the contents.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw DomainError("resultant of a zero polynomial");
    if (p.degree() == 0 || q.degree() == 0) {
        if (p.degree() == 0)
            return pow(p.lc(), static_cast<unsigned long>(q.degree()));
        return pow(q.lc(), static_cast<unsigned long>(p.degree()));
    }
    auto [cp, ip] = primitive_integer_form(p);
    auto [cq, iq] = primitive_integer_form(q);
    Integer r = sylvester_resultant(ip, iq);
    return Rational(r) * pow(cp, static_cast<unsigned long>(q.degree())) *
           pow(cq, static_cast<unsigned long>(p.degree()));
}

/// (-1)^(d(d-1)/2) Res(p, p') / lc(p).
inline Rational discriminant(const UniPoly& p) {
    const int d = p.degree();
    if (d < 1)
        throw DomainError("discriminant of a constant polynomial");
    Rational r = resultant(p, p.derivative()) / p.lc();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0)
        r = -r;
    return r;
}

// Bivariate elimination. A BiPoly is a polynomial in x whose coefficients
// are polynomials in y, ascending in x.
using BiPoly = std::vector<UniPoly>;

inline UniPoly resultant_x(const BiPoly& p, const BiPoly& q) {
    if (p.empty() || q.empty())
        throw DomainError("resultant of an empty coefficient list");
    return sylvester_resultant(p, q);
}

inline UniPoly evaluate_at(const BiPoly& p, const UniPoly& xval) {
    UniPoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * xval + *it;
    return acc;
}

} // namespace wstrass
