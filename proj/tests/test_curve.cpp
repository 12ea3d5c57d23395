#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wstrass/curve.hpp"

using namespace wstrass;
using wstrass::testing::Q;

namespace {

const UniPoly kX5p1{1, 0, 0, 0, 0, 1};
const UniPoly kX4m1{-1, 0, 0, 0, 1};

} // namespace

TEST(NewCurve, Examples) {
    auto c1 = new_curve(2, kX5p1);
    EXPECT_EQ(c1.genus(), 2);
    EXPECT_EQ(c1.G(), 1);
    auto c2 = new_curve(3, kX4m1);
    EXPECT_EQ(c2.genus(), 3);
    UniPoly repeated = UniPoly{-1, 1} * UniPoly{-1, 1} * UniPoly{2, 1};
    EXPECT_THROW(new_curve(2, repeated), DomainError);
}

TEST(NewCurve, Errors) {
    EXPECT_THROW(new_curve(1, kX5p1), DomainError);
    EXPECT_THROW(new_curve(5, kX5p1), DomainError);
    EXPECT_THROW(new_curve(2, UniPoly{1, 0, 0, 0, 1}), DomainError); // genus 1
    EXPECT_THROW(new_curve(2, UniPoly{}), DomainError);
}

TEST(NewCurve, LeadingCoefficientCarried) {
    auto c = new_curve(2, UniPoly{3, 0, 0, 0, 0, 7});
    EXPECT_EQ(c.f().lc(), 7);
    EXPECT_EQ(c.genus(), 2);
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(2, 7), 3);
    EXPECT_EQ(genus(4, 6), 7);
    EXPECT_EQ(genus(2, 5), 2);
    EXPECT_THROW(genus(1, 5), DomainError);
    EXPECT_THROW(genus(3, 3), DomainError);
}

TEST(Genus, HyperellipticSpecialisation) {
    for (int d = 5; d <= 12; ++d)
        EXPECT_EQ(genus(2, d), (d - 1) / 2) << "d = " << d;
}

TEST(Genus, CoprimeClosedForm) {
    for (int n = 2; n <= 11; ++n)
        for (int d = n + 1; d <= 12; ++d)
            if (std::gcd(n, d) == 1) {
                EXPECT_EQ(genus(n, d), (n - 1) * (d - 1) / 2);
            }
}

TEST(Places, BranchPlacesFollowFactorisation) {
    auto c = new_curve(3, kX4m1);
    auto B = c.branch_places();
    ASSERT_EQ(B.size(), 4u);
    EXPECT_EQ(B[0].root().rational_value(), std::optional<Rational>(1));
    EXPECT_EQ(B[1].root().rational_value(), std::optional<Rational>(-1));
    EXPECT_EQ(B[2].root().factor, (UniPoly{1, 0, 1}));
    EXPECT_EQ(B[3].root().root_index, 2);
    EXPECT_FALSE(B[3].root().rational_value().has_value());
    EXPECT_EQ(B[2].name(), "B_3[root #1 of x^2 + 1]");
    EXPECT_THROW(c.fiber_places(1), DomainError);
    EXPECT_EQ(c.fiber_places(Q(1, 2)).size(), 3u);
}

TEST(PrincipalDivisor, Examples) {
    auto c = new_curve(2, kX5p1);
    Divisor y = principal_divisor(c, gen::Y{});
    EXPECT_EQ(y.terms().size(), 6u);
    for (const auto& p : c.branch_places())
        EXPECT_EQ(y.terms().at(p), 1);
    EXPECT_EQ(y.terms().at(Place::infinite(1)), -5);
    EXPECT_EQ(divisor_degree(y), 0);

    Divisor dx = principal_divisor(c, gen::Dx{});
    EXPECT_EQ(dx.terms().at(Place::infinite(1)), -3);
    EXPECT_EQ(divisor_degree(dx), 2);

    Divisor xc = principal_divisor(c, gen::XMinusC{Q(1, 3)});
    EXPECT_EQ(xc.terms().at(Place::fiber(Q(1, 3), 1)), 1);
    EXPECT_EQ(xc.terms().at(Place::fiber(Q(1, 3), 2)), 1);
    EXPECT_EQ(xc.terms().at(Place::infinite(1)), -2);
    EXPECT_EQ(divisor_degree(xc), 0);

    EXPECT_THROW(principal_divisor(c, gen::XMinusC{Q(-1)}), DomainError);
    Divisor xa = principal_divisor(c, gen::XMinusRoot{1});
    EXPECT_EQ(xa.terms().at(c.branch_places()[0]), 2);
    EXPECT_EQ(divisor_degree(xa), 0);
    EXPECT_THROW(principal_divisor(c, gen::XMinusRoot{6}), DomainError);
}

TEST(DivisorDegree, EmptyAndCancellation) {
    Divisor D;
    EXPECT_EQ(divisor_degree(D), 0);
    D.add(Place::infinite(1), 3);
    D.add(Place::infinite(1), -3);
    EXPECT_TRUE(D.empty());
    EXPECT_EQ(D.to_string(), "0");
}

TEST(PrincipalDivisor, GridDegrees) {
    std::mt19937_64 rng(wstrass::testing::kGridSeed);
    for (int n = 2; n <= 11; ++n) {
        for (int d = n + 1; d <= 12; ++d) {
            if (genus(n, d) < 2)
                continue;
            auto c = new_curve(n, wstrass::testing::random_separable_monic(rng, d));
            const long canon = 2L * c.genus() - 2;
            EXPECT_EQ(divisor_degree(principal_divisor(c, gen::Dx{})), canon);
            Divisor w = principal_divisor(c, gen::DxOverYn1{});
            EXPECT_EQ(divisor_degree(w), canon);
            EXPECT_TRUE(w.supported_on(Place::Kind::Infinite));
            EXPECT_EQ(divisor_degree(principal_divisor(c, gen::Y{})), 0);
            EXPECT_EQ(divisor_degree(principal_divisor(c, gen::XMinusRoot{1})), 0);
            Rational cval = 0;
            while (c.f()(cval) == 0)
                cval += 1;
            EXPECT_EQ(divisor_degree(principal_divisor(c, gen::XMinusC{cval})), 0);
        }
    }
}
