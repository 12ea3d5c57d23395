#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wstrass {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// by ascending degree with trailing zeros trimmed, so the zero polynomial
/// has an empty coefficient vector.
class UniPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly monomial(const Rational& c, int k) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return UniPoly(std::move(v));
    }
    static UniPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

    /// Leading coefficient; 0 for the zero polynomial.
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * static_cast<long>(i);
        return UniPoly(std::move(d));
    }

    /// p(g(x)).
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * g + constant(*it);
        return acc;
    }

    UniPoly monic() const {
        if (is_zero())
            return {};
        Rational inv = 1 / lc();
        return *this * inv;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_)
            a *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero())
            throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree())
            return {UniPoly{}, a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        const Rational inv = 1 / b.lc();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + db] * inv;
            quo[k] = q;
            if (q == 0)
                continue;
            for (std::size_t j = 0; j <= db; ++j)
                rem[k + j] -= q * b.c_[j];
        }
        rem.resize(db);
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Pretty form, highest degree first, e.g. "x^4 - 1" or "3/2*x^2 + x".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& a = c_[k];
            if (a == 0)
                continue;
            Rational mag = abs(a);
            if (out.empty())
                out += (a < 0) ? "-" : "";
            else
                out += (a < 0) ? " - " : " + ";
            if (k == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1)
                out += mag.get_str() + "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

/// Monic greatest common divisor. gcd(p, 0) is p made monic.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's algorithm. Entry k of the result is the monic product of the
/// irreducible factors of multiplicity exactly k+1 (constant 1 if none);
/// trailing constant entries are dropped.
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.degree() < 1)
        return {};
    std::vector<UniPoly> out;
    UniPoly a = p.monic();
    UniPoly d = a.derivative();
    UniPoly b = gcd(a, d);
    UniPoly c = a / b;
    UniPoly w = d / b - c.derivative();
    while (c.degree() > 0) {
        UniPoly y = w.is_zero() ? c : gcd(c, w);
        out.push_back(y);
        c = c / y;
        w = w / y - c.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

/// Product of the distinct irreducible factors, monic.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() < 1)
        return UniPoly::constant(1);
    return p.monic() / gcd(p, p.derivative());
}

/// Largest k such that (x - r)^k divides p. p must be nonzero.
inline int root_multiplicity(UniPoly p, const Rational& r) {
    if (p.is_zero())
        throw DomainError("root multiplicity in the zero polynomial");
    const UniPoly lin{-r, 1};
    int k = 0;
    while (p(r) == 0) {
        p = p / lin;
        ++k;
    }
    return k;
}

/// Integer primitive form: returns (content, primitive) with p = content * primitive,
/// primitive having coprime integer coefficients and positive leading coefficient.
inline std::pair<Rational, std::vector<Integer>> primitive_integer_form(const UniPoly& p) {
    if (p.is_zero())
        return {Rational(0), {}};
    Integer den = 1;
    for (const auto& a : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& a : p.coeffs()) {
        Integer v = a.get_num() * (den / a.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0)
        g = -g;
    for (auto& v : ints)
        v /= g;
    return {make_rational(g, den), std::move(ints)};
}

inline UniPoly from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> v;
    v.reserve(c.size());
    for (const auto& a : c)
        v.emplace_back(a);
    return UniPoly(std::move(v));
}

} // namespace wstrass
