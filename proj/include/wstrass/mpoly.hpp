#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wstrass {

/// Sparse polynomial over Q in a fixed number of variables. Terms are keyed
/// by exponent vectors; zero coefficients are never stored.
class MPoly {
public:
    using Exponents = std::vector<int>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c) {
        MPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars)
            throw DomainError("variable index out of range");
        MPoly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.add_term(e, 1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_)
            throw DomainError("exponent vector has the wrong number of variables");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, total(e));
        return d;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : terms_)
            if (total(e) != d)
                return false;
        return true;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) {
        check_same(a, b);
        for (const auto& [e, c] : b.terms_)
            a.add_term(e, c);
        return a;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(MPoly a, const Rational& s) {
        if (s == 0)
            return MPoly(a.nvars_);
        for (auto& [e, c] : a.terms_)
            c *= s;
        return a;
    }
    friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }

    MPoly pow(unsigned e) const {
        MPoly r = constant(nvars_, 1);
        for (unsigned i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    MPoly partial(std::size_t i) const {
        if (i >= nvars_)
            throw DomainError("variable index out of range");
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0)
                continue;
            Exponents f = e;
            --f[i];
            r.add_term(f, c * e[i]);
        }
        return r;
    }

    Rational operator()(const std::vector<Rational>& v) const {
        if (v.size() != nvars_)
            throw DomainError("evaluation point has the wrong number of coordinates");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0)
                    t *= wstrass::pow(v[i], static_cast<unsigned long>(e[i]));
            acc += t;
        }
        return acc;
    }

    /// Substitutes polynomial images[i] for variable i.
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() != nvars_)
            throw DomainError("substitution needs one image per variable");
        const std::size_t target = images.empty() ? 0 : images[0].nvars();
        std::vector<std::vector<MPoly>> powers(nvars_);
        MPoly r(target);
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(constant(target, 1));
                while (pw.size() <= static_cast<std::size_t>(e[i]))
                    pw.push_back(pw.back() * images[i]);
                t = t * pw[static_cast<std::size_t>(e[i])];
            }
            r += t;
        }
        return r;
    }

    /// Univariate view in variable i; every other variable must be absent.
    UniPoly to_univariate(std::size_t i = 0) const {
        std::vector<Rational> c;
        for (const auto& [e, v] : terms_) {
            for (std::size_t k = 0; k < nvars_; ++k)
                if (k != i && e[k] != 0)
                    throw DomainError("polynomial involves more than one variable");
            const auto d = static_cast<std::size_t>(e[i]);
            if (c.size() <= d)
                c.resize(d + 1);
            c[d] = v;
        }
        return UniPoly(std::move(c));
    }

    static MPoly from_univariate(const UniPoly& p, std::size_t nvars = 1, std::size_t i = 0) {
        MPoly r(nvars);
        for (int k = 0; k <= p.degree(); ++k) {
            Exponents e(nvars, 0);
            e[i] = k;
            r.add_term(e, p.coeff(k));
        }
        return r;
    }

    /// Terms by descending total degree, then descending lexicographic
    /// exponents, e.g. "x^3*y + y^3*z - 1/2*z^4".
    std::string to_string(const std::vector<std::string>& names) const {
        if (names.size() != nvars_)
            throw DomainError("need one name per variable");
        if (terms_.empty())
            return "0";
        std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (total(a.first) != total(b.first))
                return total(a.first) > total(b.first);
            return a.first > b.first;
        });
        std::string out;
        for (const auto& [e, c] : sorted) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += names[i];
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
        return out;
    }

private:
    static int total(const Exponents& e) {
        int s = 0;
        for (int k : e)
            s += k;
        return s;
    }
    static void check_same(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_)
            throw DomainError("polynomials in different numbers of variables");
    }

    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

} // namespace wstrass
