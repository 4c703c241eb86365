#include "oracles.hpp"

#include "tumblegeo/lattice.hpp"

#include <gtest/gtest.h>

using namespace tumblegeo;

TEST(Denominator, RationalAndIrrational) {
    EXPECT_EQ(denom(Rational(3, 4)), Rational(1, 4));
    EXPECT_EQ(denom(Rational(6, 8)), Rational(1, 4));
    EXPECT_EQ(denom(Rational(5)), Rational(1));
    EXPECT_EQ(denom(Irrational{}), Rational(0));
    EXPECT_TRUE(visible_by_denominator(Irrational{}, Integer(7)));
}

TEST(Visibility, OriginIsGcd) {
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; b <= 20; ++b) {
            if (a == 0 && b == 0) continue;
            LatticePoint q{a, b};
            EXPECT_EQ(visible_from_origin(q), std::gcd(a, b) == 1) << q.str();
            EXPECT_EQ(visible_from(RationalPoint{}, q), oracle::visible_by_scan(RationalPoint{}, q)) << q.str();
        }
}

TEST(Visibility, MatchesBoundingBoxScanFromRationalPoints) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(-6, 9);
    for (int i = 0; i < 3000; ++i) {
        RationalPoint p(oracle::random_unit_rational(rng), oracle::random_unit_rational(rng));
        LatticePoint q{coord(rng), coord(rng)};
        if (RationalPoint(q) == p) continue;
        EXPECT_EQ(visible_from(p, q), oracle::visible_by_scan(p, q)) << p.str() << " -> " << q.str();
    }
}

TEST(Visibility, AxisParallelSegments) {
    RationalPoint p(Rational(1, 2), Rational(0));
    EXPECT_TRUE(visible_from(p, {1, 0}));
    EXPECT_FALSE(visible_from(p, {2, 0}));
    RationalPoint origin;
    EXPECT_TRUE(visible_from(origin, {0, 1}));
    EXPECT_FALSE(visible_from(origin, {0, 3}));
    EXPECT_FALSE(visible_from(origin, {-2, 0}));
}

TEST(Visibility, DegenerateSegmentThrows) {
    EXPECT_THROW(visible_from(RationalPoint{}, {0, 0}), DegenerateSegment);
}

TEST(Visibility, SectorFormAgreesInsideItsSector) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(1, 12);
    for (int i = 0; i < 3000; ++i) {
        RationalPoint p(oracle::random_unit_rational(rng), oracle::random_unit_rational(rng));
        LatticePoint q{coord(rng), coord(rng) - 1};
        if (Rational(q.b) < p.y) continue;
        EXPECT_EQ(visible_by_denominator(p, q), visible_from(p, q)) << p.str() << " -> " << q.str();
    }
}

TEST(Visibility, SectorFormRejectsOutsideSector) {
    RationalPoint p(Rational(1, 2), Rational(1, 2));
    EXPECT_THROW(visible_by_denominator(p, {0, 3}), std::domain_error);
    EXPECT_THROW(visible_by_denominator(p, {2, 0}), std::domain_error);
}

TEST(FirstBlocker, IsTheNearestLatticePointAndVisible) {
    RationalPoint origin;
    auto b = first_blocker(origin, {6, 4});
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, (LatticePoint{3, 2}));
    EXPECT_FALSE(first_blocker(origin, {3, 2}));

    RationalPoint p(Rational(1, 3), Rational(1, 3));
    auto c = first_blocker(p, {7, 7});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (LatticePoint{1, 1}));
    EXPECT_TRUE(visible_from(p, *c));
}

TEST(Det, SkewForm) {
    EXPECT_EQ(det({2, 3}, {1, 2}), 1);
    EXPECT_EQ(det({1, 2}, {2, 3}), -1);
}

TEST(RationalPoint, ParseAndCell) {
    auto p = RationalPoint::parse("1/3,2/5");
    EXPECT_EQ(p, RationalPoint(Rational(1, 3), Rational(2, 5)));
    EXPECT_TRUE(p.in_unit_cell());
    EXPECT_FALSE(RationalPoint(Rational(1), Rational(0)).in_unit_cell());
    EXPECT_THROW(RationalPoint::parse("1/3"), std::invalid_argument);
}
