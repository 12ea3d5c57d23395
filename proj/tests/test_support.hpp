#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "wstrass/poly.hpp"
#include "wstrass/resultant.hpp"

namespace wstrass::testing {

inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

/// Monic polynomial of degree d with small random integer coefficients and
/// nonzero discriminant.
inline UniPoly random_separable_monic(std::mt19937_64& rng, int d, int height = 9) {
    std::uniform_int_distribution<int> coef(-height, height);
    for (;;) {
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i < d; ++i)
            c[static_cast<std::size_t>(i)] = coef(rng);
        c.back() = 1;
        UniPoly f(c);
        if (discriminant(f) != 0)
            return f;
    }
}

/// Seed for the fixed random curves of the (n, d) grid.
inline constexpr unsigned long kGridSeed = 20240917UL;

// Brute force: every g-subset of [1, 2g-1] as a bitmask, keeping those whose
// complement (with everything >= 2g) is additively closed.
inline std::vector<std::vector<int>> brute_force_gap_sequences(int g) {
    const int top = 2 * g - 1;
    const int limit = 4 * g;
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << top); ++mask) {
        if (__builtin_popcountl(mask) != g)
            continue;
        std::vector<bool> in_s(static_cast<std::size_t>(limit) + 1, true);
        for (int k = 1; k <= top; ++k)
            if (mask >> (k - 1) & 1UL)
                in_s[static_cast<std::size_t>(k)] = false;
        bool closed = true;
        for (int a = 1; a <= limit && closed; ++a)
            for (int b = a; a + b <= limit && closed; ++b)
                if (in_s[static_cast<std::size_t>(a)] && in_s[static_cast<std::size_t>(b)] &&
                    !in_s[static_cast<std::size_t>(a + b)])
                    closed = false;
        if (!closed)
            continue;
        std::vector<int> gaps;
        for (int k = 1; k <= top; ++k)
            if (mask >> (k - 1) & 1UL)
                gaps.push_back(k);
        out.push_back(gaps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wstrass::testing
