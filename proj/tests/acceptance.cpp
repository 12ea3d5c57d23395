// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "wstrass/bounds.hpp"
#include "wstrass/curve.hpp"
#include "wstrass/local.hpp"
#include "wstrass/parse.hpp"
#include "wstrass/qdiff.hpp"
#include "wstrass/quartic.hpp"

using namespace wstrass;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct GridCurve {
    int n;
    int d;
    SuperellipticCurve curve;
};

// The fixed random curves of the sweep: every 2 <= n < d <= 12 with g >= 2.
const std::vector<GridCurve>& grid() {
    static const std::vector<GridCurve> curves = [] {
        std::vector<GridCurve> out;
        std::mt19937_64 rng(wstrass::testing::kGridSeed);
        for (int n = 2; n <= 11; ++n)
            for (int d = n + 1; d <= 12; ++d)
                if (genus(n, d) >= 2)
                    out.push_back({n, d, new_curve(n, wstrass::testing::random_separable_monic(rng, d))});
        return out;
    }();
    return curves;
}

std::string nd(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome basis_size_sweep() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    for (const auto& c : grid())
        for (int q = 1; q <= 4; ++q) {
            const auto S = enumerate_basis(c.curve, q);
            o.check(static_cast<int>(S.size()) == dimension_dq(c.curve.genus(), q),
                    nd(c.n, c.d) + " q=" + std::to_string(q) + ": |S| = " + std::to_string(S.size()));
            ++checked;
        }
    const double t = seconds_since(t0);
    o.check(t < 5.0, "sweep took " + std::to_string(t) + " s");
    if (o.ok)
        o.detail = std::to_string(checked) + " (curve, q) cases, " + std::to_string(grid().size()) + " curves";
    return o;
}

Outcome hyperelliptic_accounting() {
    Outcome o;
    std::mt19937_64 rng(wstrass::testing::kGridSeed + 1);
    for (int d = 5; d <= 12; ++d) {
        auto C = new_curve(2, wstrass::testing::random_separable_monic(rng, d));
        const long g = C.genus();
        const long w = branch_weight(C, 1);
        o.check(w == g * (g - 1) / 2, "d=" + std::to_string(d) + ": branch weight " + std::to_string(w));
        long sum = d * w;
        if (d % 2 == 1)
            sum += infinite_gap_data(C).weight;
        o.check(sum == g * g * g - g, "d=" + std::to_string(d) + ": accounted weight " + std::to_string(sum));
    }
    if (o.ok)
        o.detail = "d = 5..12";
    return o;
}

Outcome q2_accounting() {
    Outcome o;
    auto C = new_curve(2, UniPoly{3, 0, 0, 0, 0, 0, 1});
    const long w = branch_weight(C, 2);
    o.check(w == 3, "branch weight " + std::to_string(w));
    o.check(6 * w == 18 && total_weight(C.genus(), 2) == 18, "6 * weight != 18 or total != 18");
    for (const auto& c : grid())
        for (int q = 1; q <= 4; ++q)
            o.check(c.d * branch_weight(c.curve, q) <= total_weight(c.curve.genus(), q),
                    nd(c.n, c.d) + " q=" + std::to_string(q) + ": affine branch weight exceeds total");
    if (o.ok)
        o.detail = "6 x 3 = 18; affine sums bounded on the grid";
    return o;
}

Outcome positivity_and_cap() {
    Outcome o;
    for (const auto& c : grid()) {
        for (int q = 1; q <= 4; ++q)
            o.check(branch_weight(c.curve, q) >= 1, nd(c.n, c.d) + " q=" + std::to_string(q) + ": weight 0");
        const long g = c.curve.genus();
        const long w = branch_weight(c.curve, 1);
        o.check(w <= g * (g - 1) / 2, nd(c.n, c.d) + ": weight above g(g-1)/2");
        o.check((w == g * (g - 1) / 2) == (c.n == 2), nd(c.n, c.d) + ": equality does not match n = 2");
    }
    return o;
}

Outcome genus3_gaps() {
    Outcome o;
    auto C = new_curve(3, UniPoly{-1, 0, 0, 0, 1});
    const auto br = branch_gap_sequence(C, 1);
    const auto inf = infinite_gap_data(C);
    o.check(br.gaps == std::vector<int>{1, 2, 4}, "branch gaps differ");
    o.check(inf.gaps == std::vector<int>{1, 2, 5}, "infinite gaps differ");
    std::vector<std::vector<int>> all;
    for (const auto& s : enumerate_gap_sequences(3))
        all.push_back(s.gaps);
    o.check(all == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}},
            "genus-3 list differs");
    auto has = [&](const std::vector<int>& v) { return std::find(all.begin(), all.end(), v) != all.end(); };
    o.check(has(br.gaps) && has(inf.gaps), "gap sequence missing from the list");
    return o;
}

Outcome series_wronskian_match() {
    Outcome o;
    auto C = std::make_shared<const SuperellipticCurve>(2, UniPoly{1, 0, 0, 0, 0, 1});
    const AffinePoint P{0, 1};
    o.check(point_weight(*C, 1, P) == 0, "point weight is not 0");
    std::vector<TruncatedSeries> fs;
    for (auto& e : expand_basis_at_point(*C, 1, P, 16))
        fs.push_back(e.series);
    const TruncatedSeries numeric = series_wronskian(fs);
    const auto symbolic = wronskian_ff({FFElement::monomial(C, 0, -1), FFElement::monomial(C, 1, -1)}).value;
    o.check(symbolic == FFElement::monomial(C, 0, -2), "symbolic Wronskian is not 1/y^2");
    o.check(numeric.precision() >= 12, "only " + std::to_string(numeric.precision()) + " terms survive");
    o.check(numeric == to_local_series(symbolic, P, numeric.precision()), "series disagree");
    if (o.ok)
        o.detail = std::to_string(numeric.precision()) + " matching terms";
    return o;
}

PlaneQuartic quartic(const std::string& s) { return PlaneQuartic(parse_poly(s, {"x", "y", "z"})); }

Outcome quartic_profiles() {
    Outcome o;
    struct Case {
        const char* name;
        const char* F;
        std::map<int, int> want;
    };
    const std::vector<Case> cases{{"Klein", "x^3*y + y^3*z + z^3*x", {{1, 24}}},
                                  {"Fermat", "x^4 + y^4 + z^4", {{2, 12}}},
                                  {"t=3", "y^4 - x*z*(x - z)*(x - 3*z)", {{1, 16}, {2, 4}}}};
    std::ostringstream times;
    for (const auto& c : cases) {
        const PlaneQuartic F = quartic(c.F);
        double worst = 0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto p = inflection_profile(F, seed);
            worst = std::max(worst, seconds_since(t0));
            o.check(p.weight_counts == c.want, std::string(c.name) + " seed " + std::to_string(seed) + ": counts differ");
            o.check(p.total == 24, std::string(c.name) + ": total " + std::to_string(p.total));
        }
        o.check(worst < 10.0, std::string(c.name) + ": profile took " + std::to_string(worst) + " s");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s %.2fs", times.str().empty() ? "" : ", ", c.name, worst);
        times << buf;
    }
    if (o.ok)
        o.detail = "5 seeds each; slowest profile " + times.str();
    return o;
}

Outcome tangent_oracle() {
    Outcome o;
    const PlaneQuartic F = quartic("y^4 - x*z*(x - z)*(x - 3*z)");
    const auto p = inflection_profile(F, 1);
    const std::vector<ProjectivePoint> pts{{0, 0, 1}, {1, 0, 1}, {1, 0, 0}, {3, 0, 1}};
    for (const auto& P : pts) {
        const int t = tangent_line_test(F, P);
        o.check(t == 2 && p.weight_at(P) == 2, to_string(P) + ": tangent " + std::to_string(t) + ", profile " +
                                                   std::to_string(p.weight_at(P)));
    }
    o.check(tangent_line_test(quartic("x^3*y + y^3*z + z^3*x"), {1, 0, 0}) == 1, "Klein (1:0:0) is not a flex");
    return o;
}

Outcome bounds_checks() {
    Outcome o;
    const Signature s = min_positive_R();
    o.check(s.gY == 0 && s.orders == std::vector<long>{2, 3, 7} && s.R == make_rational(1, 42),
            "min R signature is not (0; 2,3,7), 1/42");
    RamificationProfile klein{168, 0, {}};
    klein.multiplicities.insert(klein.multiplicities.end(), 84, 2);
    klein.multiplicities.insert(klein.multiplicities.end(), 56, 3);
    klein.multiplicities.insert(klein.multiplicities.end(), 24, 7);
    o.check(riemann_hurwitz_genus(klein) == 3, "(2,3,7) cover of degree 168 is not genus 3");
    o.check(hurwitz_bound(3) == 168, "84(g - 1) != 168 at g = 3");
    for (long g = 2; g <= 8; ++g)
        o.check(fixed_point_bound(g, 2, false) == 2 * g + 2, "fixed point bound at g=" + std::to_string(g));
    return o;
}

Outcome gap_enumeration() {
    Outcome o;
    const std::vector<std::size_t> counts{1, 2, 4};
    for (int g = 1; g <= 3; ++g)
        o.check(enumerate_gap_sequences(g).size() == counts[static_cast<std::size_t>(g - 1)],
                "count at g=" + std::to_string(g));
    for (int g = 1; g <= 7; ++g) {
        std::vector<std::vector<int>> got;
        for (const auto& s : enumerate_gap_sequences(g))
            got.push_back(s.gaps);
        o.check(got == wstrass::testing::brute_force_gap_sequences(g), "oracle mismatch at g=" + std::to_string(g));
    }
    return o;
}

Outcome canonical_degree() {
    Outcome o;
    for (const auto& c : grid()) {
        const auto& C = c.curve;
        const long K = 2L * C.genus() - 2;
        o.check(divisor_degree(principal_divisor(C, gen::Dx{})) == K, nd(c.n, c.d) + ": deg (dx)");
        o.check(divisor_degree(principal_divisor(C, gen::DxOverYn1{})) == K, nd(c.n, c.d) + ": deg (dx/y^(n-1))");
        o.check(divisor_degree(principal_divisor(C, gen::Y{})) == 0, nd(c.n, c.d) + ": deg (y)");
        for (int i = 1; i <= C.d(); ++i)
            o.check(divisor_degree(principal_divisor(C, gen::XMinusRoot{i})) == 0, nd(c.n, c.d) + ": deg (x - a_i)");
        Rational v = 0;
        while (C.f()(v) == 0)
            v += 1;
        o.check(divisor_degree(principal_divisor(C, gen::XMinusC{v})) == 0, nd(c.n, c.d) + ": deg (x - c)");
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"basis-size sweep", basis_size_sweep},
        {"hyperelliptic q=1 accounting", hyperelliptic_accounting},
        {"(2,6) q=2 accounting", q2_accounting},
        {"branch positivity and cap", positivity_and_cap},
        {"genus-3 gap sequences", genus3_gaps},
        {"series Wronskian", series_wronskian_match},
        {"quartic profiles", quartic_profiles},
        {"tangent-line oracle", tangent_oracle},
        {"bounds", bounds_checks},
        {"gap-sequence enumeration", gap_enumeration},
        {"canonical degree", canonical_degree},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double t = seconds_since(t0);
        if (!o.ok)
            ++failures;
        std::printf("criterion %2zu %s  %s (%.2fs)%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), t,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
