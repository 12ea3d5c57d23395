#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curve.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "function_field.hpp"
#include "qdiff.hpp"
#include "series.hpp"

namespace wstrass {

/// Affine non-branch point (x0, y0) with y0^n = f(x0) != 0, both rational.
struct AffinePoint {
    Rational x;
    Rational y;
};

/// Taylor data in the local coordinate t = x - x0 at an affine non-branch point.
struct LocalExpansion {
    AffinePoint point;
    TruncatedSeries series;
};

inline void check_non_branch_point(const SuperellipticCurve& C, const AffinePoint& P) {
    const Rational fx = C.f()(P.x);
    if (fx == 0)
        throw DomainError("x0 = " + P.x.get_str() + " is a root of f (a branch point); use the branch weight instead");
    if (pow(P.y, static_cast<unsigned long>(C.n())) != fx)
        throw DomainError("y0^n != f(x0): (" + P.x.get_str() + ", " + P.y.get_str() + ") is not on the curve");
}

/// y as a power series in t = x - x0 with y(0) = y0.
inline TruncatedSeries local_y(const SuperellipticCurve& C, const AffinePoint& P, std::size_t precision) {
    check_non_branch_point(C, P);
    const UniPoly shifted = C.f().compose(UniPoly{P.x, 1});
    return series_nth_root(TruncatedSeries::from_poly(shifted, precision), static_cast<unsigned>(C.n()), P.y);
}

/// Expansion of a function field element at the point. Coefficient
/// denominators must not vanish at x0.
inline TruncatedSeries to_local_series(const FFElement& e, const AffinePoint& P, std::size_t precision) {
    const SuperellipticCurve& C = *e.curve();
    const TruncatedSeries y = local_y(C, P, precision);
    TruncatedSeries acc = TruncatedSeries::constant(0, precision);
    TruncatedSeries ypow = TruncatedSeries::constant(1, precision);
    for (const auto& r : e.coeffs()) {
        if (!r.is_zero())
            acc = acc + r.expand_at(P.x, precision) * ypow;
        ypow = ypow * y;
    }
    return acc;
}

/// Local coefficient functions of the q-differential basis at a non-branch
/// point: for (a, b) in S_{n,d,q}, the series of x^a y^b / y^(q(n-1)), i.e.
/// the basis written against (dt)^q. Using x^a instead of (x - alpha)^a spans
/// the same space for each b, so Wronskian orders are unchanged.
inline std::vector<LocalExpansion> expand_basis_at_point(const SuperellipticCurve& C, int q, const AffinePoint& P,
                                                         std::size_t precision) {
    if (precision == 0)
        throw DomainError("precision must be at least 1");
    const auto basis = enumerate_basis(C, q);
    const TruncatedSeries y = local_y(C, P, precision);
    const TruncatedSeries yinv = y.inverse();
    const TruncatedSeries denom = yinv.pow(static_cast<unsigned>(q * (C.n() - 1)));
    const TruncatedSeries x = TruncatedSeries({P.x, 1}, precision);
    std::vector<LocalExpansion> out;
    out.reserve(basis.size());
    for (const auto& e : basis) {
        TruncatedSeries s = x.pow(static_cast<unsigned>(e.a)) * y.pow(static_cast<unsigned>(e.b)) * denom;
        out.push_back({P, s.truncated(precision)});
    }
    return out;
}

/// Wronskian determinant of power series with respect to t. The result
/// carries whatever precision survives differentiation and elimination.
inline TruncatedSeries series_wronskian(const std::vector<TruncatedSeries>& fs) {
    const std::size_t m = fs.size();
    if (m == 0)
        throw DomainError("Wronskian of an empty list");
    Matrix<TruncatedSeries> rows(m, std::vector<TruncatedSeries>(m));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][0] = fs[i];
        for (std::size_t k = 1; k < m; ++k)
            rows[i][k] = rows[i][k - 1].derivative();
    }
    return bareiss_determinant(std::move(rows));
}

inline constexpr std::size_t kDefaultPrecisionCap = 1024;

/// Order of vanishing at t = 0 of the Wronskian of the local q-differential
/// basis, which is the q-Weierstrass weight of the point. The working
/// precision starts at m(m-1)/2 + g(g-1)/2 + 8 (m = d_q) and doubles while
/// the truncated Wronskian shows no nonzero coefficient; past `precision_cap`
/// a PrecisionExhausted error is raised.
inline long point_weight(const SuperellipticCurve& C, int q, const AffinePoint& P,
                         std::size_t precision_cap = kDefaultPrecisionCap) {
    check_non_branch_point(C, P);
    const long m = dimension_dq(C.genus(), q);
    const long g = C.genus();
    std::size_t N = static_cast<std::size_t>(m * (m - 1) / 2 + g * (g - 1) / 2 + 8);
    while (N <= precision_cap) {
        std::vector<TruncatedSeries> fs;
        for (auto& e : expand_basis_at_point(C, q, P, N))
            fs.push_back(std::move(e.series));
        if (auto ord = series_wronskian(fs).order())
            return static_cast<long>(*ord);
        N *= 2;
    }
    throw PrecisionExhausted("Wronskian order not resolved below the precision cap " + std::to_string(precision_cap));
}

} // namespace wstrass
