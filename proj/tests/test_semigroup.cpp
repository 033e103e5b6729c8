#include "support.hpp"

#include <gtest/gtest.h>

using namespace absirr;

namespace {

// independent check: nested loops over multiples of each generator
bool brute_member(std::uint64_t t, const std::vector<std::uint64_t>& g) {
    if (g.empty()) return t == 0;
    if (g.size() == 1) return t % g[0] == 0;
    for (std::uint64_t a = 0; a * g[0] <= t; ++a) {
        const std::uint64_t r = t - a * g[0];
        if (g.size() == 2) {
            if (r % g[1] == 0) return true;
            continue;
        }
        for (std::uint64_t b = 0; b * g[1] <= r; ++b)
            if ((r - b * g[1]) % g[2] == 0) return true;
    }
    return false;
}

}  // namespace

TEST(SpanMembership, Examples) {
    EXPECT_TRUE(span_membership(0, GeneratorSet{3, 5}));
    EXPECT_TRUE(span_membership(0, GeneratorSet{}));
    EXPECT_FALSE(span_membership(7, GeneratorSet{3, 5}));
    EXPECT_TRUE(span_membership(8, GeneratorSet{3, 5}));
    EXPECT_TRUE(span_membership(9, GeneratorSet{3, 5}));
}

TEST(GapsBelow, Examples) {
    EXPECT_EQ(gaps_below(8, GeneratorSet{3, 5}), (std::vector<std::uint64_t>{1, 2, 4, 7}));
    EXPECT_TRUE(gaps_below(5, GeneratorSet{1}).empty());
    EXPECT_EQ(gaps_below(4, GeneratorSet{}), (std::vector<std::uint64_t>{1, 2, 3}));
}

TEST(GeneratorSet, SortsDeduplicatesAndRejectsZero) {
    EXPECT_EQ(GeneratorSet({5, 3, 5}).generators(), (std::vector<std::uint64_t>{3, 5}));
    EXPECT_THROW(GeneratorSet({0, 2}), Error);
}

TEST(SpanMembership, AgreesWithBruteForceExhaustive) {
    std::vector<std::vector<std::uint64_t>> sets{{}};
    for (std::uint64_t a = 1; a <= 12; ++a) {
        sets.push_back({a});
        for (std::uint64_t b = a + 1; b <= 12; ++b) {
            sets.push_back({a, b});
            for (std::uint64_t c = b + 1; c <= 12; ++c) sets.push_back({a, b, c});
        }
    }
    ASSERT_EQ(sets.size(), 1u + 12u + 66u + 220u);
    for (const auto& g : sets) {
        const auto table = span_table(100, GeneratorSet(g));
        for (std::uint64_t t = 0; t <= 100; ++t) ASSERT_EQ(table[t], brute_member(t, g)) << t;
    }
}

TEST(SpanMembership, ClosedUnderAddingGenerators) {
    Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::uint64_t> g;
        for (int k = 0; k < 3; ++k) g.push_back(1 + uniform_below(rng, 15));
        const GeneratorSet set(g);
        for (auto x : set.generators()) EXPECT_TRUE(span_membership(x, set));
        const std::uint64_t t = uniform_below(rng, 60);
        if (span_membership(t, set)) {
            for (auto x : set.generators()) EXPECT_TRUE(span_membership(t + x, set));
        }
    }
}

TEST(SpanStatus, PrefixMembership) {
    const std::vector<std::uint64_t> gaps{3, 5, 9};
    EXPECT_EQ(span_status(gaps), (std::vector<bool>{false, false, true}));
    const std::vector<std::uint64_t> g2{2, 4, 5, 7};
    EXPECT_EQ(span_status(g2), (std::vector<bool>{false, true, false, true}));
    EXPECT_TRUE(span_status(std::vector<std::uint64_t>{}).empty());
}
