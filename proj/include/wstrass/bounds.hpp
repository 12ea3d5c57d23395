#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wstrass {

/// Branched cover X -> Y of degree `deg`, g(Y) = gY, with the multiplicities
/// mult_p >= 2 of its ramification points.
struct RamificationProfile {
    long deg = 1;
    long gY = 0;
    std::vector<long> multiplicities;
};

/// g(X) from 2(g_X - 1) = 2 deg (g_Y - 1) + sum (mult_p - 1).
inline long riemann_hurwitz_genus(const RamificationProfile& r) {
    if (r.deg < 1)
        throw DomainError("cover degree must be at least 1");
    if (r.gY < 0)
        throw DomainError("target genus must be nonnegative");
    long ram = 0;
    for (long m : r.multiplicities) {
        if (m < 2)
            throw DomainError("ramification multiplicities must be at least 2 (got " + std::to_string(m) + ")");
        if (m > r.deg)
            throw DomainError("multiplicity " + std::to_string(m) + " exceeds the degree " + std::to_string(r.deg));
        ram += m - 1;
    }
    if (ram % 2 != 0)
        throw DomainError("total ramification " + std::to_string(ram) + " is odd; the genus would not be an integer");
    const long g = r.deg * (r.gY - 1) + 1 + ram / 2;
    if (g < 0)
        throw DomainError("profile gives negative genus " + std::to_string(g));
    return g;
}

/// Upper bound 84(g - 1) on the number of automorphisms of a genus-g curve.
inline long hurwitz_bound(long g) {
    if (g < 2)
        throw DomainError("Hurwitz bound needs genus at least 2 (got " + std::to_string(g) + ")");
    return 84 * (g - 1);
}

/// Signature (gY; r_1 <= ... <= r_s) of a quotient map with
/// R = 2 gY - 2 + sum (1 - 1/r_i).
struct Signature {
    long gY = 0;
    std::vector<long> orders;
    Rational R;
};

inline Rational signature_R(long gY, const std::vector<long>& orders) {
    Rational R = 2 * gY - 2;
    for (long r : orders)
        R += 1 - make_rational(1, r);
    return R;
}

struct SignatureSearch {
    long max_order = 50;
    long max_s = 6;
    long max_gY = 2;
    long min_gY = 0;
    long min_s = 0;
};

/// Signature with the smallest positive R among gY in [min_gY, max_gY],
/// s in [min_s, max_s] and 2 <= r_i <= max_order. Ties go to the
/// lexicographically smallest (gY, s, orders).
inline Signature min_positive_R(const SignatureSearch& opts = {}) {
    if (opts.max_order < 2 && opts.max_s > 0)
        throw DomainError("orders must be allowed up to at least 2");
    bool found = false;
    Signature best;
    std::vector<long> orders;
    auto consider = [&](long gY) {
        Rational R = signature_R(gY, orders);
        if (R <= 0)
            return;
        if (!found || R < best.R) {
            best = Signature{gY, orders, R};
            found = true;
        }
    };
    // Nondecreasing order tuples of length s, visited lexicographically.
    auto walk = [&](auto&& self, long gY, long s, long from) -> void {
        if (static_cast<long>(orders.size()) == s) {
            consider(gY);
            return;
        }
        const long left = s - static_cast<long>(orders.size());
        for (long r = from; r <= opts.max_order; ++r) {
            // R grows with every r_i, so filling the rest with r bounds the
            // whole subtree; once that is no better, larger r are worse.
            if (found) {
                Rational lower = signature_R(gY, orders) + left * (1 - make_rational(1, r));
                if (lower > 0 && lower >= best.R)
                    break;
            }
            orders.push_back(r);
            self(self, gY, s, r);
            orders.pop_back();
        }
    };
    for (long gY = std::max(0L, opts.min_gY); gY <= opts.max_gY; ++gY)
        for (long s = std::max(0L, opts.min_s); s <= opts.max_s; ++s)
            walk(walk, gY, s, 2);
    if (!found)
        throw DomainError("no signature with R > 0 in the search range");
    return best;
}

/// Bound on the fixed points of an automorphism of order k on a genus-g
/// curve: min of floor(2(k + g - 1)/(k - 1)), 2g + 2 and, for
/// nonhyperelliptic curves, 2g - 1.
inline long fixed_point_bound(long g, long order, bool nonhyperelliptic) {
    if (g < 2)
        throw DomainError("genus must be at least 2 (got " + std::to_string(g) + ")");
    if (order < 2)
        throw DomainError("automorphism order must be at least 2 (got " + std::to_string(order) + ")");
    long b = std::min(2 * (order + g - 1) / (order - 1), 2 * g + 2);
    if (nonhyperelliptic)
        b = std::min(b, 2 * g - 1);
    return b;
}

} // namespace wstrass
