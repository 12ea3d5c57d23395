#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "mpoly.hpp"
#include "poly.hpp"
#include "resultant.hpp"

namespace wstrass {

using ProjectivePoint = std::array<Rational, 3>;
using IntMatrix3 = std::array<std::array<long, 3>, 3>;

inline long det3(const IntMatrix3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix3 inverse_unimodular(const IntMatrix3& a) {
    const long d = det3(a);
    if (d != 1 && d != -1)
        throw DomainError("matrix is not unimodular");
    IntMatrix3 inv{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[i][j] = d * (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]);
        }
    return inv;
}

inline ProjectivePoint transform_point(const IntMatrix3& a, const ProjectivePoint& v) {
    ProjectivePoint r;
    for (int i = 0; i < 3; ++i)
        r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return r;
}

/// Scales to coprime integer coordinates with the first nonzero one positive.
inline ProjectivePoint normalize(ProjectivePoint p) {
    Integer den = 1, num = 0;
    for (const auto& c : p)
        den = lcm(den, Integer(c.get_den()));
    for (auto& c : p) {
        c *= den;
        num = gcd(num, Integer(c.get_num()));
    }
    if (num == 0)
        throw DomainError("(0, 0, 0) is not a projective point");
    int sign = 1;
    for (const auto& c : p)
        if (c != 0) {
            sign = c < 0 ? -1 : 1;
            break;
        }
    for (auto& c : p)
        c = c / Rational(num) * sign;
    return p;
}

inline std::string to_string(const ProjectivePoint& p) {
    return "(" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ")";
}

/// Nonzero homogeneous quartic form F(x, y, z) over Q.
class PlaneQuartic {
public:
    explicit PlaneQuartic(MPoly F) : F_(std::move(F)) {
        if (F_.nvars() != 3)
            throw DomainError("a plane quartic is a form in x, y, z");
        if (F_.is_zero())
            throw DomainError("the zero form is not a quartic");
        if (!F_.is_homogeneous(4))
            throw DomainError("form is not homogeneous of degree 4");
    }

    const MPoly& form() const { return F_; }
    Rational operator()(const ProjectivePoint& p) const { return F_({p[0], p[1], p[2]}); }
    std::string to_string() const { return F_.to_string({"x", "y", "z"}); }

    /// F(A v): the form pulled back along v -> A v.
    PlaneQuartic sheared(const IntMatrix3& a) const { return PlaneQuartic(shear(F_, a)); }

    static MPoly shear(const MPoly& F, const IntMatrix3& a) {
        std::vector<MPoly> images;
        for (int i = 0; i < 3; ++i) {
            MPoly row(3);
            for (int j = 0; j < 3; ++j)
                row += MPoly::variable(3, static_cast<std::size_t>(j)) * Rational(a[i][j]);
            images.push_back(row);
        }
        return F.substitute(images);
    }

private:
    MPoly F_;
};

/// det of the matrix of second partial derivatives of a ternary form.
inline MPoly hessian(const MPoly& F) {
    std::array<std::array<MPoly, 3>, 3> h;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            h[i][j] = F.partial(i).partial(j);
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

inline MPoly hessian(const PlaneQuartic& F) { return hessian(F.form()); }

namespace detail {

// F(x, y, 1) as a polynomial in x with coefficients in Q[y].
inline BiPoly dehomogenize_xy(const MPoly& F) {
    BiPoly out;
    for (const auto& [e, c] : F.terms()) {
        const auto i = static_cast<std::size_t>(e[0]);
        if (out.size() <= i)
            out.resize(i + 1);
        out[i] = out[i] + UniPoly::monomial(c, e[1]);
    }
    while (!out.empty() && out.back().is_zero())
        out.pop_back();
    return out;
}

// F(x, 1, 0) as a polynomial in x.
inline UniPoly restrict_to_infinity(const MPoly& F) {
    UniPoly out;
    for (const auto& [e, c] : F.terms())
        if (e[2] == 0)
            out = out + UniPoly::monomial(c, e[0]);
    return out;
}

inline UniPoly gcd_allow_zero(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero())
        return UniPoly{};
    return gcd(a, b);
}

// Res_x(p, q) allowing q of x-degree 0.
inline UniPoly resultant_x_general(const BiPoly& p, const BiPoly& q) {
    if (q.empty())
        return UniPoly{};
    if (q.size() == 1) {
        UniPoly r = UniPoly::constant(1);
        for (std::size_t i = 1; i < p.size(); ++i)
            r = r * q[0];
        return r;
    }
    return resultant_x(p, q);
}

// p(x, y0) as a polynomial in x.
inline UniPoly fiber(const BiPoly& p, const Rational& y0) {
    std::vector<Rational> c;
    for (const auto& a : p)
        c.push_back(a(y0));
    return UniPoly(std::move(c));
}

inline bool shares_root(const UniPoly& a, const UniPoly& b) {
    if (a.degree() < 1)
        return false;
    if (b.is_zero())
        return true;
    return gcd(a, b).degree() > 0;
}

class ShearSource {
public:
    explicit ShearSource(std::uint64_t seed) : rng_(seed) {}

    IntMatrix3 next() {
        std::uniform_int_distribution<long> entry(-3, 3);
        for (;;) {
            IntMatrix3 a;
            for (auto& row : a)
                for (auto& v : row)
                    v = entry(rng_);
            const long d = det3(a);
            if (d == 1 || d == -1)
                return a;
        }
    }

private:
    std::mt19937_64 rng_;
};

inline constexpr int kShearBudget = 64;

} // namespace detail

/// Exact smoothness test: no common projective zero of the three partials.
/// After a shear making the x^4 coefficient nonzero, the line z = 0 is
/// checked by gcds and the chart z = 1 through the subresultant chain of
/// F and dF/dx, which finds every affine point where F(., y0) has a
/// repeated root; such a point is singular iff dF/dy also vanishes there.
inline bool is_smooth(const PlaneQuartic& F, std::uint64_t seed = 1) {
    detail::ShearSource shears(seed);
    MPoly G;
    for (int attempt = 0;; ++attempt) {
        if (attempt == detail::kShearBudget)
            throw DomainError("no shear with a nonzero x^4 coefficient found");
        G = PlaneQuartic::shear(F.form(), shears.next());
        if (G.coeff({4, 0, 0}) != 0)
            break;
    }
    const MPoly Gx = G.partial(0), Gy = G.partial(1), Gz = G.partial(2);

    // Points (x : 1 : 0); (1 : 0 : 0) is off the curve.
    UniPoly g = detail::gcd_allow_zero(detail::restrict_to_infinity(Gx), detail::restrict_to_infinity(Gy));
    g = detail::gcd_allow_zero(g, detail::restrict_to_infinity(Gz));
    if (g.is_zero() || g.degree() > 0)
        return false;

    const BiPoly P = detail::dehomogenize_xy(G);
    const BiPoly Px = detail::dehomogenize_xy(Gx);
    const BiPoly Py = detail::dehomogenize_xy(Gy);
    const UniPoly h = resultant_x(P, Px);
    if (h.is_zero())
        return false;
    if (h.degree() < 1)
        return true;

    UniPoly rest = squarefree_part(h);
    for (std::size_t k = 1; k <= 3 && rest.degree() > 0; ++k) {
        // Roots of `rest` where gcd_x(P, Px) has degree exactly k.
        BiPoly S;
        UniPoly psc;
        if (k < 3) {
            S = subresultant(P, Px, k);
            psc = S.back();
        } else {
            S = Px;
            psc = Px.back();
        }
        UniPoly exact = rest;
        UniPoly higher = UniPoly::constant(1);
        if (!psc.is_zero()) {
            higher = gcd(rest, psc);
            exact = rest / higher;
        } else {
            higher = rest;
            exact = UniPoly::constant(1);
        }
        if (exact.degree() > 0 && detail::shares_root(exact, detail::resultant_x_general(S, Py)))
            return false;
        rest = higher;
    }
    return true;
}

/// Counts and weights of the 24 inflection points (with weight) of a smooth
/// plane quartic, read from the root multiplicities of Res_x(F, Hess F)
/// after a generic shear.
struct InflectionProfile {
    std::map<int, int> weight_counts; ///< weight -> number of points
    int distinct_count = 0;
    int total = 0;
    IntMatrix3 shear{};
    UniPoly eliminant; ///< Res_x(G(x, y, 1), Hess G(x, y, 1)) for the sheared form G
    MPoly hessian_form;
    PlaneQuartic curve;
    std::vector<std::pair<ProjectivePoint, int>> rational_points; ///< with weights

    /// Weight of a point of the original curve; 0 when it is not an inflection.
    int weight_at(const ProjectivePoint& p) const {
        if (curve(p) != 0)
            throw DomainError("point " + to_string(p) + " is not on the curve");
        if (hessian_form({p[0], p[1], p[2]}) != 0)
            return 0;
        const ProjectivePoint v = transform_point(inverse_unimodular(shear), p);
        if (v[2] == 0)
            return 0;
        return root_multiplicity(eliminant, v[1] / v[2]);
    }
};

inline InflectionProfile inflection_profile(const PlaneQuartic& F, std::uint64_t seed = 1) {
    if (!is_smooth(F, seed))
        throw DomainError("the quartic is singular; inflection profiles need a smooth curve");
    const MPoly HF = hessian(F);
    detail::ShearSource shears(seed);
    for (int attempt = 0; attempt < detail::kShearBudget; ++attempt) {
        const IntMatrix3 A = shears.next();
        const MPoly G = PlaneQuartic::shear(F.form(), A);
        const MPoly H = hessian(G);
        // Constant leading coefficients in x: no point of either curve at (1:0:0).
        if (G.coeff({4, 0, 0}) == 0 || H.coeff({6, 0, 0}) == 0)
            continue;
        const BiPoly Gb = detail::dehomogenize_xy(G);
        const BiPoly Hb = detail::dehomogenize_xy(H);
        const UniPoly R = resultant_x(Gb, Hb);
        // Degree 24 means no intersection point on z = 0.
        if (R.degree() != 24)
            continue;
        const auto parts = squarefree_decomposition(R);
        if (parts.size() > 2)
            continue;
        if (parts.size() == 2 && parts[1].degree() > 0) {
            // Each double root must come from a single point of its fiber.
            const UniPoly psc1 = subresultant_coefficient(Gb, Hb, 1, 1);
            if (psc1.is_zero() || gcd(parts[1], psc1).degree() > 0)
                continue;
        }
        InflectionProfile out{{}, 0, 0, A, R, HF, F, {}};
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const int w = static_cast<int>(k) + 1;
            const int cnt = parts[k].degree();
            if (cnt <= 0)
                continue;
            out.weight_counts[w] = cnt;
            out.distinct_count += cnt;
            out.total += w * cnt;
        }
        for (const Rational& y0 : rational_roots(R)) {
            const UniPoly common = gcd(detail::fiber(Gb, y0), detail::fiber(Hb, y0));
            if (common.degree() != 1)
                throw DomainError("internal error: a certified fiber does not hold a single point");
            const ProjectivePoint v{-common.coeff(0), y0, 1};
            out.rational_points.emplace_back(normalize(transform_point(A, v)), root_multiplicity(R, y0));
        }
        return out;
    }
    throw DomainError("no generic shear found within the retry budget");
}

/// m - 2 where m is the intersection multiplicity at P of F with its tangent
/// line at P: 0 ordinary point, 1 flex, 2 hyperflex.
inline int tangent_line_test(const PlaneQuartic& F, const ProjectivePoint& P) {
    if (P[0] == 0 && P[1] == 0 && P[2] == 0)
        throw DomainError("(0, 0, 0) is not a projective point");
    if (F(P) != 0)
        throw DomainError("point " + to_string(P) + " is not on the curve");
    std::array<Rational, 3> grad;
    for (std::size_t i = 0; i < 3; ++i)
        grad[i] = F.form().partial(i)({P[0], P[1], P[2]});
    if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
        throw DomainError("point " + to_string(P) + " is a singular point of the curve");
    // Q = grad x P lies on the tangent line and is not proportional to P.
    const ProjectivePoint Q{grad[1] * P[2] - grad[2] * P[1], grad[2] * P[0] - grad[0] * P[2],
                            grad[0] * P[1] - grad[1] * P[0]};
    // phi(s, t) = F(sP + tQ), in the variables (s, t, unused).
    std::vector<MPoly> images;
    for (int i = 0; i < 3; ++i)
        images.push_back(MPoly::variable(3, 0) * P[i] + MPoly::variable(3, 1) * Q[i]);
    const MPoly phi = F.form().substitute(images);
    if (phi.is_zero())
        throw DomainError("the tangent line is a component of the curve");
    int m = 4;
    for (const auto& [e, c] : phi.terms())
        m = std::min(m, e[1]);
    return m - 2;
}

} // namespace wstrass
