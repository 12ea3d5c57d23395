#pragma once

#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "poly.hpp"
#include "resultant.hpp"

namespace wstrass {

/// Genus of the smooth model of y^n = f(x), deg f = d, from
/// 2g - 2 = nd - n - d - gcd(n, d).
inline int genus(int n, int d) {
    if (n < 2)
        throw DomainError("cover degree n must be at least 2 (got " + std::to_string(n) + ")");
    if (d <= n)
        throw DomainError("deg f must exceed n (got d = " + std::to_string(d) + ", n = " + std::to_string(n) + ")");
    const int two_g_minus_2 = n * d - n - d - std::gcd(n, d);
    // Always even: n, d, gcd(n, d) cannot all be odd with nd odd.
    assert(two_g_minus_2 % 2 == 0);
    return two_g_minus_2 / 2 + 1;
}

/// A root of f named by its monic irreducible factor over Q and a 1-based
/// index among that factor's roots. Linear factors carry a rational value.
struct RootDescriptor {
    UniPoly factor;
    int root_index = 1;

    std::optional<Rational> rational_value() const {
        if (factor.degree() != 1)
            return std::nullopt;
        return Rational(-factor.coeff(0));
    }

    std::string to_string() const {
        if (auto r = rational_value())
            return r->get_str();
        return "root #" + std::to_string(root_index) + " of " + factor.to_string();
    }
};

/// A place of the smooth model: an affine branch point B_i, one of the G
/// places P^inf_m over x = infinity, or one of the n places P^c_j over a
/// non-branch value x = c.
class Place {
public:
    enum class Kind { AffineBranch, Infinite, AffineFiber };

    static Place branch(int i, RootDescriptor root) {
        Place p(Kind::AffineBranch, i);
        p.root_ = std::move(root);
        return p;
    }
    static Place infinite(int m) { return Place(Kind::Infinite, m); }
    static Place fiber(const Rational& c, int j) {
        Place p(Kind::AffineFiber, j);
        p.c_ = c;
        return p;
    }

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    const RootDescriptor& root() const { return root_; }
    const Rational& fiber_value() const { return c_; }

    std::string name() const {
        switch (kind_) {
        case Kind::AffineBranch:
            return "B_" + std::to_string(index_) + "[" + root_.to_string() + "]";
        case Kind::Infinite:
            return "Pinf_" + std::to_string(index_);
        case Kind::AffineFiber:
            return "P^" + c_.get_str() + "_" + std::to_string(index_);
        }
        return {};
    }

    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_)
            return a.kind_ < b.kind_;
        if (a.kind_ == Kind::AffineFiber && a.c_ != b.c_)
            return a.c_ < b.c_;
        return a.index_ < b.index_;
    }
    friend bool operator==(const Place& a, const Place& b) { return !(a < b) && !(b < a); }

private:
    Place(Kind k, int index) : kind_(k), index_(index) {}

    Kind kind_;
    int index_;
    RootDescriptor root_;
    Rational c_;
};

/// Finite formal sum of places with nonzero integer coefficients.
class Divisor {
public:
    void add(const Place& p, long coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const std::map<Place, long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    long degree() const {
        long s = 0;
        for (const auto& [p, c] : terms_)
            s += c;
        return s;
    }

    bool supported_on(Place::Kind kind) const {
        for (const auto& [p, c] : terms_)
            if (p.kind() != kind)
                return false;
        return true;
    }

    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& [p, c] : b.terms_)
            a.add(p, c);
        return a;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [p, c] : terms_) {
            if (!out.empty())
                out += (c < 0) ? " - " : " + ";
            else if (c < 0)
                out += "-";
            const long mag = c < 0 ? -c : c;
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += p.name();
        }
        return out;
    }

private:
    std::map<Place, long> terms_;
};

inline long divisor_degree(const Divisor& D) { return D.degree(); }

/// Smooth projective model of y^n = f(x) with f separable of degree d > n
/// and genus at least 2. The leading coefficient of f is arbitrary.
class SuperellipticCurve {
public:
    SuperellipticCurve(int n, UniPoly f) : n_(n), f_(std::move(f)) {
        if (n_ < 2)
            throw DomainError("cover degree n must be at least 2 (got " + std::to_string(n_) + ")");
        d_ = f_.degree();
        if (f_.is_zero() || d_ <= n_)
            throw DomainError("deg f must exceed n (got d = " + std::to_string(f_.is_zero() ? -1 : d_) +
                              ", n = " + std::to_string(n_) + ")");
        if (discriminant(f_) == 0)
            throw DomainError("f is not separable (it has a repeated root)");
        G_ = std::gcd(n_, d_);
        g_ = wstrass::genus(n_, d_);
        if (g_ < 2)
            throw DomainError("curve has genus " + std::to_string(g_) + "; genus at least 2 is required");
        factors_ = factor_squarefree(f_);
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int G() const { return G_; }
    int genus() const { return g_; }
    const UniPoly& f() const { return f_; }

    /// Monic irreducible factors of f over Q, in the order used to number B_i.
    const std::vector<UniPoly>& branch_factors() const { return factors_; }

    std::vector<Place> branch_places() const {
        std::vector<Place> out;
        int i = 1;
        for (const auto& fac : factors_)
            for (int k = 1; k <= fac.degree(); ++k)
                out.push_back(Place::branch(i++, RootDescriptor{fac, k}));
        return out;
    }

    std::vector<Place> infinite_places() const {
        std::vector<Place> out;
        for (int m = 1; m <= G_; ++m)
            out.push_back(Place::infinite(m));
        return out;
    }

    std::vector<Place> fiber_places(const Rational& c) const {
        if (f_(c) == 0)
            throw DomainError("x = " + c.get_str() + " is a root of f; its fiber is a single branch point");
        std::vector<Place> out;
        for (int j = 1; j <= n_; ++j)
            out.push_back(Place::fiber(c, j));
        return out;
    }

private:
    int n_;
    UniPoly f_;
    int d_ = 0;
    int G_ = 0;
    int g_ = 0;
    std::vector<UniPoly> factors_;
};

inline SuperellipticCurve new_curve(int n, const UniPoly& f) { return SuperellipticCurve(n, f); }

/// Generators whose divisors have closed forms on the superelliptic model.
namespace gen {
struct XMinusC { Rational c; };    ///< x - c with f(c) != 0
struct XMinusRoot { int i; };      ///< x - alpha_i, i in 1..d
struct Y {};                       ///< y
struct Dx {};                      ///< dx
struct DxOverYn1 {};               ///< dx / y^(n-1)
} // namespace gen

using DivisorGenerator = std::variant<gen::XMinusC, gen::XMinusRoot, gen::Y, gen::Dx, gen::DxOverYn1>;

inline Divisor principal_divisor(const SuperellipticCurve& C, const DivisorGenerator& generator) {
    const int n = C.n(), d = C.d(), G = C.G();
    Divisor D;
    auto add_infinity = [&](long coeff) {
        for (const auto& p : C.infinite_places())
            D.add(p, coeff);
    };
    auto add_branches = [&](long coeff) {
        for (const auto& p : C.branch_places())
            D.add(p, coeff);
    };
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, gen::XMinusC>) {
                if (C.f()(g.c) == 0)
                    throw DomainError("f(" + g.c.get_str() +
                                      ") = 0: x - c at a root of f must use the x - alpha_i form");
                for (const auto& p : C.fiber_places(g.c))
                    D.add(p, 1);
                add_infinity(-(n / G));
            } else if constexpr (std::is_same_v<T, gen::XMinusRoot>) {
                if (g.i < 1 || g.i > d)
                    throw DomainError("branch index must lie in 1.." + std::to_string(d));
                D.add(C.branch_places()[static_cast<std::size_t>(g.i - 1)], n);
                add_infinity(-(n / G));
            } else if constexpr (std::is_same_v<T, gen::Y>) {
                add_branches(1);
                add_infinity(-(d / G));
            } else if constexpr (std::is_same_v<T, gen::Dx>) {
                add_branches(n - 1);
                add_infinity(-(n / G + 1));
            } else {
                add_infinity((2 * C.genus() - 2) / G);
            }
        },
        generator);
    return D;
}

} // namespace wstrass
