#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wstrass {

namespace detail {

// Dense polynomials over Z/pZ, ascending coefficients in [0, p), trimmed.
using ModPoly = std::vector<Integer>;

inline void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline Integer mod(const Integer& a, const Integer& p) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

inline Integer inverse_mod(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("non-invertible element modulo p");
    return r;
}

inline ModPoly sub(const ModPoly& a, const ModPoly& b, const Integer& p) {
    ModPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer x = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
        r[i] = mod(x, p);
    }
    trim(r);
    return r;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b, const Integer& p) {
    if (a.empty() || b.empty())
        return {};
    ModPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& x : r)
        x = mod(x, p);
    trim(r);
    return r;
}

inline std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, const Integer& p) {
    if (b.empty())
        throw DomainError("modular polynomial division by zero");
    if (a.size() < b.size())
        return {{}, a};
    const Integer inv = inverse_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    ModPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = mod(a[k + db] * inv, p);
        q[k] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            a[k + j] = mod(a[k + j] - c * b[j], p);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline ModPoly make_monic(ModPoly a, const Integer& p) {
    if (a.empty())
        return a;
    const Integer inv = inverse_mod(a.back(), p);
    for (auto& x : a)
        x = mod(x * inv, p);
    return a;
}

inline ModPoly gcd(ModPoly a, ModPoly b, const Integer& p) {
    while (!b.empty()) {
        ModPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

inline ModPoly powmod(ModPoly base, Integer e, const ModPoly& m, const Integer& p) {
    ModPoly result{Integer(1)};
    base = divmod(base, m, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = divmod(mul(result, base, p), m, p).second;
        e >>= 1;
        if (e > 0)
            base = divmod(mul(base, base, p), m, p).second;
    }
    return result;
}

inline ModPoly derivative(const ModPoly& a, const Integer& p) {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(mod(a[i] * static_cast<unsigned long>(i), p));
    trim(d);
    return d;
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree g whose
// irreducible factors all have degree d (p odd).
inline void split_equal_degree(const ModPoly& g, std::size_t d, const Integer& p, gmp_randclass& rng,
                               std::vector<ModPoly>& out) {
    const std::size_t deg = g.size() - 1;
    if (deg == d) {
        out.push_back(g);
        return;
    }
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), d);
    const Integer e = (pd - 1) / 2;
    for (;;) {
        ModPoly a(deg);
        for (auto& c : a)
            c = rng.get_z_range(p);
        trim(a);
        if (a.size() < 2)
            continue;
        ModPoly b = sub(powmod(a, e, g, p), ModPoly{Integer(1)}, p);
        ModPoly c = gcd(g, b, p);
        if (c.size() > 1 && c.size() < g.size()) {
            split_equal_degree(c, d, p, rng, out);
            split_equal_degree(divmod(g, c, p).first, d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic squarefree f modulo an odd prime p.
inline std::vector<ModPoly> factor_mod_p(ModPoly f, const Integer& p) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260116UL);
    std::vector<ModPoly> out;
    const ModPoly x{Integer(0), Integer(1)};
    ModPoly h = x;
    for (std::size_t d = 1; f.size() > 1; ++d) {
        if (f.size() - 1 < 2 * d) {
            out.push_back(f);
            break;
        }
        h = powmod(h, p, f, p);
        ModPoly g = gcd(f, sub(h, x, p), p);
        if (g.size() > 1) {
            split_equal_degree(g, d, p, rng, out);
            f = divmod(f, g, p).first;
            h = divmod(h, f, p).second;
        }
    }
    return out;
}

inline std::vector<Integer> symmetric_lift(const ModPoly& a, const Integer& p) {
    const Integer half = p / 2;
    std::vector<Integer> r = a;
    for (auto& x : r)
        if (x > half)
            x -= p;
    return r;
}

inline bool less_poly(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i))
            return a.coeff(i) < b.coeff(i);
    return false;
}

// Smallest prime above 2 * 2^deg * ||F||_2 * |lc(F)| that keeps F squarefree
// and of full degree, with F reduced modulo it. Any integer factor of F,
// scaled to leading coefficient lc(F), has coefficients below half of it.
inline std::pair<Integer, ModPoly> good_prime(const std::vector<Integer>& F) {
    const std::size_t deg = F.size() - 1;
    const Integer lc = F.back();
    Integer norm2 = 0;
    for (const auto& c : F)
        norm2 += c * c;
    Integer norm = sqrt(norm2) + 1;
    Integer p = 2 * (Integer(1) << static_cast<mp_bitcnt_t>(deg)) * norm * abs(lc) + 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mod(lc, p) == 0)
            continue;
        ModPoly fp;
        for (const auto& c : F)
            fp.push_back(mod(c, p));
        trim(fp);
        if (gcd(fp, derivative(fp, p), p).size() > 1)
            continue;
        return {p, fp};
    }
}

} // namespace detail

/// Monic irreducible factors over Q of a squarefree polynomial of positive
/// degree, sorted by (degree, coefficients from the top). Uses a single prime
/// above the factor coefficient bound and subset recombination, so no Hensel
/// lifting is needed.
inline std::vector<UniPoly> factor_squarefree(const UniPoly& f) {
    if (f.degree() < 1)
        throw DomainError("factorization of a constant polynomial");
    if (gcd(f, f.derivative()).degree() > 0)
        throw DomainError("factorization input is not squarefree");
    if (f.degree() == 1)
        return {f.monic()};

    std::vector<Integer> F = primitive_integer_form(f).second;
    auto [p, fp] = detail::good_prime(F);
    std::vector<detail::ModPoly> mod_factors = detail::factor_mod_p(detail::make_monic(fp, p), p);

    std::vector<UniPoly> found;
    UniPoly remaining = from_integers(F);
    std::size_t s = 1;
    while (2 * s <= mod_factors.size()) {
        bool hit = false;
        const std::size_t r = mod_factors.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        for (;;) {
            Integer lead = primitive_integer_form(remaining).second.back();
            detail::ModPoly cand{detail::mod(lead, p)};
            for (std::size_t i : idx)
                cand = detail::mul(cand, mod_factors[i], p);
            UniPoly h = from_integers(detail::symmetric_lift(cand, p));
            if (h.degree() > 0) {
                h = from_integers(primitive_integer_form(h).second);
                auto [q, rem] = divmod(remaining, h);
                if (rem.is_zero()) {
                    found.push_back(h.monic());
                    remaining = q;
                    for (std::size_t k = s; k-- > 0;)
                        mod_factors.erase(mod_factors.begin() + static_cast<std::ptrdiff_t>(idx[k]));
                    hit = true;
                    break;
                }
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == r - s + (k - 1))
                --k;
            if (k == 0)
                break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!hit)
            ++s;
    }
    if (remaining.degree() > 0)
        found.push_back(remaining.monic());
    std::sort(found.begin(), found.end(), detail::less_poly);
    return found;
}

/// Distinct rational roots of a nonzero polynomial, ascending. Roots modulo
/// a large prime are lifted and confirmed by exact evaluation.
inline std::vector<Rational> rational_roots(const UniPoly& f) {
    if (f.is_zero())
        throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> out;
    if (f.degree() < 1)
        return out;
    const UniPoly g = squarefree_part(f);
    std::vector<Integer> F = primitive_integer_form(g).second;
    const Integer lc = F.back();
    auto [p, fp] = detail::good_prime(F);
    fp = detail::make_monic(fp, p);
    const detail::ModPoly x{Integer(0), Integer(1)};
    detail::ModPoly lin = detail::gcd(fp, detail::sub(detail::powmod(x, p, fp, p), x, p), p);
    if (lin.size() < 2)
        return out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260116UL);
    std::vector<detail::ModPoly> linear;
    detail::split_equal_degree(lin, 1, p, rng, linear);
    for (const auto& l : linear) {
        // l = x - r; a rational root a/b has b | lc, so lc * a / b is an
        // integer below p / 2 in absolute value.
        Integer r = detail::mod(-l[0], p);
        Integer c = detail::mod(lc * r, p);
        if (c > p / 2)
            c -= p;
        Rational cand = make_rational(c, lc);
        if (g(cand) == 0)
            out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wstrass
