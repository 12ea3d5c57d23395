#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "rational_function.hpp"

namespace wstrass {

/// Element of the function field Q(x)[y]/(y^n - f) of a superelliptic curve,
/// stored as the coefficients r_0..r_{n-1} of y^0..y^{n-1}.
///
/// y^n - f is irreducible over Q(x) because f is separable of positive
/// degree, so every nonzero element is invertible.
class FFElement {
public:
    using CurvePtr = std::shared_ptr<const SuperellipticCurve>;

    FFElement() = default;
    FFElement(CurvePtr curve, std::vector<RationalFunction> coeffs)
        : curve_(std::move(curve)), c_(std::move(coeffs)) {
        if (!curve_)
            throw DomainError("function field element without a curve");
        if (c_.size() != static_cast<std::size_t>(curve_->n()))
            throw DomainError("function field element needs exactly n coefficients");
    }

    static FFElement zero(CurvePtr curve) {
        const auto n = static_cast<std::size_t>(curve->n());
        return FFElement(std::move(curve), std::vector<RationalFunction>(n));
    }
    static FFElement from_x(CurvePtr curve, const RationalFunction& r) {
        FFElement e = zero(std::move(curve));
        e.c_[0] = r;
        return e;
    }
    static FFElement constant(CurvePtr curve, const Rational& c) { return from_x(std::move(curve), RationalFunction(c)); }
    static FFElement x(CurvePtr curve) { return from_x(std::move(curve), RationalFunction(UniPoly::x())); }
    static FFElement y(CurvePtr curve) {
        FFElement e = zero(std::move(curve));
        e.c_[1] = RationalFunction(Rational(1));
        return e;
    }
    /// x^a y^b for any integers a, b.
    static FFElement monomial(const CurvePtr& curve, int a, int b) {
        FFElement xa = from_x(curve, a >= 0 ? RationalFunction(UniPoly::monomial(1, a))
                                            : RationalFunction(UniPoly::constant(1), UniPoly::monomial(1, -a)));
        return xa * y(curve).pow(b);
    }

    const CurvePtr& curve() const { return curve_; }
    const std::vector<RationalFunction>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero())
                return false;
        return true;
    }

    FFElement operator-() const {
        FFElement r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    friend FFElement operator+(const FFElement& a, const FFElement& b) {
        check_same(a, b);
        FFElement r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend FFElement operator-(const FFElement& a, const FFElement& b) { return a + (-b); }

    friend FFElement operator*(const FFElement& a, const FFElement& b) {
        check_same(a, b);
        const std::size_t n = a.c_.size();
        std::vector<RationalFunction> full(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b.c_[j].is_zero())
                    full[i + j] += a.c_[i] * b.c_[j];
        }
        // y^(n+k) = f * y^k
        const RationalFunction f(a.curve_->f());
        for (std::size_t k = 2 * n - 1; k-- > n;)
            full[k - n] += full[k] * f;
        full.resize(n);
        return FFElement(a.curve_, std::move(full));
    }

    FFElement inverse() const;

    friend FFElement operator/(const FFElement& a, const FFElement& b) { return a * b.inverse(); }

    FFElement pow(int e) const {
        if (e < 0)
            return inverse().pow(-e);
        FFElement r = constant(curve_, 1);
        FFElement b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            e >>= 1;
            if (e)
                b = b * b;
        }
        return r;
    }

    friend bool operator==(const FFElement& a, const FFElement& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + c_[j].to_string() + ")";
            if (j > 0)
                out += "*y" + (j > 1 ? "^" + std::to_string(j) : "");
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check_same(const FFElement& a, const FFElement& b) {
        if (!a.curve_ || !b.curve_)
            throw DomainError("arithmetic on an unbound function field element");
        if (a.curve_ != b.curve_ && !(a.curve_->n() == b.curve_->n() && a.curve_->f() == b.curve_->f()))
            throw DomainError("function field elements belong to different curves");
    }

    CurvePtr curve_;
    std::vector<RationalFunction> c_;
};

inline bool is_zero(const FFElement& e) { return e.is_zero(); }

inline FFElement FFElement::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero in the function field");
    // Solve M v = e_0 over Q(x), where column j of M holds this * y^j.
    const std::size_t n = c_.size();
    Matrix<RationalFunction> M(n, std::vector<RationalFunction>(n + 1));
    FFElement col = *this;
    const FFElement yy = y(curve_);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            M[i][j] = col.c_[i];
        col = col * yy;
    }
    M[0][n] = RationalFunction(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M[p][k].is_zero())
            ++p;
        if (p == n)
            throw DomainError("singular multiplication matrix in the function field");
        std::swap(M[p], M[k]);
        const RationalFunction inv = RationalFunction(Rational(1)) / M[k][k];
        for (std::size_t j = k; j <= n; ++j)
            M[k][j] = M[k][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || M[i][k].is_zero())
                continue;
            const RationalFunction factor = M[i][k];
            for (std::size_t j = k; j <= n; ++j)
                M[i][j] = M[i][j] - factor * M[k][j];
        }
    }
    std::vector<RationalFunction> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = M[i][n];
    return FFElement(curve_, std::move(v));
}

/// d/dx, using D(r(x) y^j) = (r' + r j f' / (n f)) y^j from y^n = f.
inline FFElement ff_derive(const FFElement& e) {
    const auto& C = *e.curve();
    const RationalFunction logdiff(C.f().derivative(), C.f() * Rational(C.n()));
    std::vector<RationalFunction> out(e.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const RationalFunction& r = e.coeffs()[j];
        if (r.is_zero())
            continue;
        out[j] = r.derivative() + r * logdiff * RationalFunction(Rational(static_cast<long>(j)));
    }
    return FFElement(e.curve(), std::move(out));
}

inline constexpr std::size_t kWronskianCap = 12;

/// Wronskian of m elements together with its differential weight m(m-1)/2:
/// the determinant transforms like an m(m-1)/2-fold differential.
struct Wronskian {
    FFElement value;
    int differential_weight = 0;
};

/// det of the m x m matrix whose row i is (e_i, D e_i, ..., D^(m-1) e_i).
/// Vanishes exactly when the elements are linearly dependent over constants.
inline Wronskian wronskian_ff(const std::vector<FFElement>& elems, std::size_t cap = kWronskianCap) {
    const std::size_t m = elems.size();
    if (m == 0)
        throw DomainError("Wronskian of an empty list");
    if (m > cap)
        throw DomainError("Wronskian size " + std::to_string(m) + " exceeds the cap " + std::to_string(cap));
    Matrix<FFElement> rows(m, std::vector<FFElement>(m));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][0] = elems[i];
        for (std::size_t k = 1; k < m; ++k)
            rows[i][k] = ff_derive(rows[i][k - 1]);
    }
    return Wronskian{bareiss_determinant(std::move(rows)), static_cast<int>(m * (m - 1) / 2)};
}

} // namespace wstrass
