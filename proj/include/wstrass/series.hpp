#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wstrass {

/// Power series in t known modulo t^N. The precision N travels with the value;
/// every operation returns the largest precision that its inputs justify.
class TruncatedSeries {
public:
    /// Precision 0: nothing is known. Also the result of operations whose
    /// inputs leave no known coefficient.
    TruncatedSeries() = default;

    TruncatedSeries(std::vector<Rational> coeffs, std::size_t precision) : c_(std::move(coeffs)) {
        if (precision == 0)
            throw DomainError("series precision must be positive");
        c_.resize(precision);
    }

    static TruncatedSeries constant(const Rational& c, std::size_t precision) {
        return TruncatedSeries({c}, precision);
    }

    /// The polynomial p(t) truncated to the given precision.
    static TruncatedSeries from_poly(const UniPoly& p, std::size_t precision) {
        return TruncatedSeries(p.coeffs(), precision);
    }

    std::size_t precision() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    /// Index of the first nonzero coefficient; nullopt when every known
    /// coefficient vanishes (the order is then only known to be >= N).
    std::optional<std::size_t> order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0)
                return i;
        return std::nullopt;
    }

    bool is_zero() const { return !order().has_value(); }

    TruncatedSeries truncated(std::size_t precision) const {
        TruncatedSeries r = *this;
        r.c_.resize(std::min(precision, c_.size()));
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r;
        r.c_.resize(std::min(a.precision(), b.precision()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        // a = A + O(t^Na), b = B + O(t^Nb): the product is known to
        // min(Na + ord B, Nb + ord A).
        const std::size_t va = a.order().value_or(a.precision());
        const std::size_t vb = b.order().value_or(b.precision());
        const std::size_t prec = std::min(a.precision() + vb, b.precision() + va);
        TruncatedSeries r;
        r.c_.assign(prec, Rational(0));
        for (std::size_t i = va; i < a.precision() && i < prec; ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = vb; j < b.precision() && i + j < prec; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
        TruncatedSeries r = a;
        for (auto& x : r.c_)
            x *= s;
        return r;
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    TruncatedSeries inverse() const {
        if (c_.empty() || c_[0] == 0)
            throw DomainError("series inverse needs a nonzero constant term");
        const std::size_t n = c_.size();
        std::vector<Rational> r(n);
        const Rational inv0 = 1 / c_[0];
        r[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= k; ++j)
                acc += c_[j] * r[k - j];
            r[k] = -acc * inv0;
        }
        return TruncatedSeries(std::move(r), n);
    }

    /// Exact quotient in Q[[t]]; requires ord(a) >= ord(b). Dividing by a
    /// series of order v costs v terms of precision; when nothing survives
    /// the result has precision 0.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        const auto vb = b.order();
        if (!vb)
            throw DomainError("series division by a value indistinguishable from zero");
        const std::size_t shift = *vb;
        const auto va = a.order();
        if (va && *va < shift)
            throw DomainError("series quotient would have a pole");
        if (a.precision() <= shift)
            return {};
        return a.shifted_down(shift) * b.shifted_down(shift).inverse();
    }

    /// d/dt; one term of precision is lost.
    TruncatedSeries derivative() const {
        TruncatedSeries d;
        if (c_.size() < 2)
            return d;
        d.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.c_[i - 1] = c_[i] * static_cast<long>(i);
        return d;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries r = constant(1, precision());
        TruncatedSeries b = *this;
        while (e) {
            if (e & 1u)
                r = r * b;
            e >>= 1;
            if (e)
                b = b * b;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + c_[i].get_str() + ")";
            if (i > 0)
                out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        if (out.empty())
            out = "0";
        return out + " + O(" + var + "^" + std::to_string(c_.size()) + ")";
    }

private:
    TruncatedSeries shifted_down(std::size_t k) const {
        TruncatedSeries r;
        r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return r;
    }

    std::vector<Rational> c_;
};

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }

inline int pivot_cost(const TruncatedSeries& s) {
    return static_cast<int>(s.order().value_or(std::numeric_limits<int>::max() / 2));
}

/// n-th root r of s with r(0) = root0, by Newton iteration
/// r <- ((n-1) r + s / r^(n-1)) / n, doubling the precision each step.
inline TruncatedSeries series_nth_root(const TruncatedSeries& s, unsigned n, const Rational& root0) {
    if (n == 0)
        throw DomainError("root index must be positive");
    if (s.precision() == 0 || s[0] == 0)
        throw DomainError("series n-th root needs a nonzero constant term");
    if (pow(root0, n) != s[0])
        throw DomainError("root0^n does not equal the constant term");
    const std::size_t target = s.precision();
    TruncatedSeries r = TruncatedSeries::constant(root0, 1);
    std::size_t prec = 1;
    const Rational inv_n = make_rational(1, static_cast<unsigned long>(n));
    while (prec < target) {
        prec = std::min(2 * prec, target);
        TruncatedSeries rp = TruncatedSeries(r.coeffs(), prec);
        TruncatedSeries sp = s.truncated(prec);
        TruncatedSeries step = rp * Rational(n - 1) + sp * rp.pow(n - 1).inverse();
        r = step * inv_n;
    }
    return r;
}

} // namespace wstrass
