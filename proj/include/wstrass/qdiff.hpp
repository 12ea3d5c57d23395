#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"

namespace wstrass {

/// Dimension of the space of holomorphic q-differentials on a genus-g curve.
inline int dimension_dq(int g, int q) {
    if (q < 1)
        throw DomainError("q must be at least 1 (got " + std::to_string(q) + ")");
    if (g < 2)
        throw DomainError("genus must be at least 2 (got " + std::to_string(g) + ")");
    return q == 1 ? g : (g - 1) * (2 * q - 1);
}

/// (a, b) labels the q-differential (x - alpha)^a y^b (dx / y^(n-1))^q.
struct ExponentPair {
    int a = 0;
    int b = 0;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Gap sequence at a point together with its weight sum(n_i - i).
struct GapSequence {
    std::vector<int> gaps;
    long weight = 0;

    static GapSequence from_gaps(std::vector<int> gaps) {
        std::sort(gaps.begin(), gaps.end());
        long w = 0;
        for (std::size_t i = 0; i < gaps.size(); ++i)
            w += gaps[i] - static_cast<long>(i + 1);
        return GapSequence{std::move(gaps), w};
    }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;
    friend bool operator<(const GapSequence& a, const GapSequence& b) { return a.gaps < b.gaps; }
};

/// All (a, b) with a >= 0, 0 <= b < n and an + bd <= (2g - 2)q, sorted by
/// an + b, the vanishing order of the corresponding differential at every
/// affine branch point.
inline std::vector<ExponentPair> enumerate_basis(int n, int d, int g, int q) {
    if (q < 1)
        throw DomainError("q must be at least 1 (got " + std::to_string(q) + ")");
    const long bound = static_cast<long>(2 * g - 2) * q;
    std::vector<ExponentPair> out;
    for (int b = 0; b < n; ++b)
        for (int a = 0; static_cast<long>(a) * n + static_cast<long>(b) * d <= bound; ++a)
            out.push_back({a, b});
    std::sort(out.begin(), out.end(),
              [n](const ExponentPair& l, const ExponentPair& r) { return l.a * n + l.b < r.a * n + r.b; });
    return out;
}

inline std::vector<ExponentPair> enumerate_basis(const SuperellipticCurve& C, int q) {
    return enumerate_basis(C.n(), C.d(), C.genus(), q);
}

/// q-gap sequence shared by every affine branch point: the gaps are
/// {an + b + 1 : (a, b) in S_{n,d,q}}. The formula does not depend on the root.
inline GapSequence branch_gap_sequence(const SuperellipticCurve& C, int q) {
    std::vector<int> gaps;
    for (const auto& e : enumerate_basis(C, q))
        gaps.push_back(e.a * C.n() + e.b + 1);
    return GapSequence::from_gaps(std::move(gaps));
}

inline long branch_weight(const SuperellipticCurve& C, int q) { return branch_gap_sequence(C, q).weight; }

/// Gap sequence (q = 1) at the single place over infinity when gcd(n, d) = 1:
/// the complement in [1, 2g - 1] of the semigroup generated by n and d.
inline GapSequence infinite_gap_data(const SuperellipticCurve& C) {
    if (C.G() != 1)
        throw DomainError("infinite gap data needs gcd(n, d) = 1 (got gcd = " + std::to_string(C.G()) + ")");
    const int top = 2 * C.genus() - 1;
    std::vector<char> nongap(static_cast<std::size_t>(top) + 1, 0);
    nongap[0] = 1;
    for (int k = 1; k <= top; ++k) {
        if (k >= C.n() && nongap[static_cast<std::size_t>(k - C.n())])
            nongap[static_cast<std::size_t>(k)] = 1;
        if (k >= C.d() && nongap[static_cast<std::size_t>(k - C.d())])
            nongap[static_cast<std::size_t>(k)] = 1;
    }
    std::vector<int> gaps;
    for (int k = 1; k <= top; ++k)
        if (!nongap[static_cast<std::size_t>(k)])
            gaps.push_back(k);
    return GapSequence::from_gaps(std::move(gaps));
}

/// Total q-Weierstrass weight on a genus-g curve.
inline long total_weight(int g, int q) {
    if (q < 1)
        throw DomainError("q must be at least 1 (got " + std::to_string(q) + ")");
    if (g < 2)
        throw DomainError("genus must be at least 2 (got " + std::to_string(g) + ")");
    const long G = g;
    if (q == 1)
        return G * G * G - G;
    const long t = 2L * q - 1;
    return G * (G - 1) * (G - 1) * t * t;
}

/// Total inflectionary weight (r + 1)(d + rg - r) of an r-dimensional linear
/// system of degree d on a genus-g curve.
inline long total_inflectionary_weight(long r, long d, long g) { return (r + 1) * (d + r * g - r); }

inline constexpr int kGapSequenceGenusCap = 9;

/// All gap sequences of genus g: g-subsets of [1, 2g - 1] containing 1 whose
/// complement in N is closed under addition, in lexicographic order.
inline std::vector<GapSequence> enumerate_gap_sequences(int g, int cap = kGapSequenceGenusCap) {
    if (g < 1)
        throw DomainError("genus must be at least 1 (got " + std::to_string(g) + ")");
    if (g > cap)
        throw DomainError("genus " + std::to_string(g) + " exceeds the enumeration cap " + std::to_string(cap));
    const int top = 2 * g - 1;
    std::vector<GapSequence> out;
    std::vector<char> is_gap(static_cast<std::size_t>(top) + 1, 0);
    std::vector<int> chosen;

    // Decide k = 2..top in order. A number that is a sum of two smaller
    // non-gaps must be a non-gap; every number >= 2g is a non-gap.
    auto forced_nongap = [&](int k) {
        for (int a = 1; 2 * a <= k; ++a)
            if (!is_gap[static_cast<std::size_t>(a)] && !is_gap[static_cast<std::size_t>(k - a)])
                return true;
        return false;
    };
    auto dfs = [&](auto&& self, int k) -> void {
        const int remaining = g - static_cast<int>(chosen.size());
        if (remaining > top - k + 1)
            return;
        if (k > top) {
            if (remaining == 0)
                out.push_back(GapSequence::from_gaps(chosen));
            return;
        }
        if (remaining > 0 && !forced_nongap(k)) {
            is_gap[static_cast<std::size_t>(k)] = 1;
            chosen.push_back(k);
            self(self, k + 1);
            chosen.pop_back();
            is_gap[static_cast<std::size_t>(k)] = 0;
        }
        self(self, k + 1);
    };
    is_gap[1] = 1;
    chosen.push_back(1);
    dfs(dfs, 2);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wstrass
