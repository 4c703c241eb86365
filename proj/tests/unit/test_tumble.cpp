#include "oracles.hpp"

#include "tumblegeo/tumble.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace tumblegeo;

TEST(TumbleSequence, Examples) {
    EXPECT_EQ(tumble_sequence(1, 1).str(), "");
    EXPECT_EQ(tumble_sequence(2, 1).str(), "r");
    EXPECT_EQ(tumble_sequence(1, 2).str(), "u");
    EXPECT_EQ(tumble_sequence(5, 2).str(), "rrurr");
    EXPECT_EQ(tumble_sequence(2, 5).str(), "uuruu");
    EXPECT_EQ(tumble_sequence(5, 3).str(), "rurrur");
}

TEST(TumbleSequence, RejectsBadInput) {
    EXPECT_THROW(tumble_sequence(0, 1), std::domain_error);
    EXPECT_THROW(tumble_sequence(4, 6), std::domain_error);
    EXPECT_THROW(TumbleSequence("rxu"), std::invalid_argument);
}

TEST(TumbleSequence, ClosedFormMatchesCrossingOrder) {
    for (int a = 1; a <= 40; ++a)
        for (int b = 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto expected = oracle::word_by_events(RationalPoint{}, {a, b});
            ASSERT_TRUE(expected);
            EXPECT_EQ(tumble_sequence(a, b).str(), *expected) << a << "," << b;
            EXPECT_EQ(tumble_sequence_of_segment(RationalPoint{}, {a, b}), tumble_sequence(a, b));
        }
}

TEST(TumbleSequence, SegmentWordFromRationalStarts) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(0, 9);
    for (int i = 0; i < 2000; ++i) {
        RationalPoint p(oracle::random_unit_rational(rng), oracle::random_unit_rational(rng));
        LatticePoint q{coord(rng), coord(rng)};
        if (RationalPoint(q) == p) continue;
        auto expected = oracle::word_by_events(p, q);
        bool blocked = !visible_from(p, q);
        if (blocked || !expected) {
            EXPECT_THROW(tumble_sequence_of_segment(p, q), VertexHit) << p.str() << " -> " << q.str();
        } else {
            EXPECT_EQ(tumble_sequence_of_segment(p, q).str(), *expected) << p.str() << " -> " << q.str();
        }
    }
}

TEST(TumbleSequence, VertexHitReportsThePoint) {
    try {
        tumble_sequence_of_segment(RationalPoint{}, {4, 2});
        FAIL() << "expected a vertex hit";
    } catch (const VertexHit& hit) {
        EXPECT_EQ(hit.where(), (LatticePoint{2, 1}));
    }
}

TEST(TumbleSequence, PalindromesAndLetterCounts) {
    for (int a = 1; a <= 60; ++a)
        for (int b = 1; b <= 60; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto t = tumble_sequence(a, b);
            EXPECT_TRUE(is_palindrome(t));
            EXPECT_EQ(t.count('r'), std::size_t(a - 1));
            EXPECT_EQ(t.count('u'), std::size_t(b - 1));
            EXPECT_EQ(tumble_sequence(b, a), t.swapped_letters());
        }
    EXPECT_FALSE(is_palindrome(TumbleSequence("ru")));
}

TEST(TumblePath, LabelsAlongRrurr) {
    auto path = tumble_path(TumbleSequence("rrurr"));
    const std::vector<std::tuple<int, int, int>> expected{
        {0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}, {2, 0, 5}, {2, 1, 7}, {2, 2, 3},
        {3, 0, 4}, {3, 1, 6}, {3, 2, 2}, {4, 1, 4}, {4, 2, 0}, {5, 1, 5}, {5, 2, 1}};
    for (auto [x, y, label] : expected) EXPECT_EQ(path.label_at(x, y), label) << x << "," << y;
    EXPECT_EQ(path.endpoint(), (Cell{5, 2}));
    EXPECT_EQ(path.squares.size(), 6u);
    EXPECT_THROW(path.label_at(0, 2), std::out_of_range);
}

TEST(TumblePath, SumToSevenPropagationMatchesSimulation) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        TumbleSequence t(oracle::random_word(rng, 30));
        auto path = tumble_path(t);
        EXPECT_EQ(propagate_labels_by_sum_to_seven(t), path.corner_labels);
        EXPECT_TRUE(sum_to_seven_holds(path));
    }
}

TEST(TumblePath, EndpointIsUpperRightCornerOfTarget) {
    for (int a = 1; a <= 15; ++a)
        for (int b = 1; b <= 15; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto path = tumble_path(tumble_sequence(a, b));
            EXPECT_EQ(path.endpoint(), (Cell{a, b}));
        }
}
