#include <gtest/gtest.h>

#include "windbraid/braid_word.hpp"

using namespace windbraid;

TEST(ParseWord, EmptyIsIdentity) {
    EXPECT_TRUE(parse_word("", 3).empty());
    EXPECT_TRUE(parse_word("  . ", 3).empty());
}

TEST(ParseWord, MixedSquare) {
    const auto w = parse_word("s1 s2^-1 s1 s2^-1", 3);
    const std::vector<Letter> want{{1, 1}, {2, -1}, {1, 1}, {2, -1}};
    EXPECT_EQ(w.letters(), want);
}

TEST(ParseWord, DeltaExpands) {
    const std::vector<Letter> want{{1, 1}, {2, 1}, {1, 1}};
    EXPECT_EQ(parse_word("D", 3).letters(), want);
    EXPECT_EQ(parse_word("D", 4).size(), 6u);
}

TEST(ParseWord, RoundHalfTwist) {
    const std::vector<Letter> want{{2, 1}, {3, 1}, {2, 1}};
    EXPECT_EQ(parse_word("D[2,4]", 5).letters(), want);
    EXPECT_EQ(parse_word("D[1,2]", 3).letters(), (std::vector<Letter>{{1, 1}}));
}

TEST(ParseWord, Exponents) {
    EXPECT_EQ(parse_word("s1^3", 2).size(), 3u);
    EXPECT_EQ(parse_word("s2^-2", 3).letters(), (std::vector<Letter>{{2, -1}, {2, -1}}));
    EXPECT_TRUE(parse_word("s1^0", 3).empty());
}

TEST(ParseWord, ExponentsOnDelta) {
    const auto w = parse_word("D^-2.s1", 3);
    ASSERT_EQ(w.size(), 7u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(w.letters()[i].sign, -1);
    EXPECT_EQ(w.letters()[6], (Letter{1, 1}));
}

TEST(ParseWord, Errors) {
    EXPECT_THROW(parse_word("s3", 3), BraidError);
    EXPECT_THROW(parse_word("s0", 3), BraidError);
    EXPECT_THROW(parse_word("x1", 3), BraidError);
    EXPECT_THROW(parse_word("s1s2", 3), BraidError);
    EXPECT_THROW(parse_word("s1^", 3), BraidError);
    EXPECT_THROW(parse_word("D[1,4]", 3), BraidError);
    EXPECT_THROW(parse_word("s1", 1), BraidError);
    try {
        parse_word("s1 s2 q", 3);
        FAIL();
    } catch (const BraidError& e) {
        EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos);
    }
}

TEST(PrintWord, Format) {
    EXPECT_EQ(print_word(BraidWord(3)), "");
    EXPECT_EQ(print_word(BraidWord(3, {{1, 1}, {2, -1}})), "s1 s2^-1");
    EXPECT_EQ(print_word(delta_word(3)), "s1 s2 s1");
}

TEST(PrintWord, RoundTripRandom) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto w = random_word(n, static_cast<int>(seed % 17), seed);
        EXPECT_EQ(parse_word(print_word(w), n), w);
    }
}

TEST(FreeReduce, Examples) {
    EXPECT_TRUE(free_reduce(parse_word("s1 s1^-1", 3)).empty());
    EXPECT_EQ(free_reduce(parse_word("s1 s2 s2^-1 s1", 3)), parse_word("s1 s1", 3));
    EXPECT_EQ(free_reduce(parse_word("s1 s2 s1", 3)), parse_word("s1 s2 s1", 3));
}

TEST(FreeReduce, IdempotentAndShortening) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto w = random_word(3, 12, seed);
        const auto r = free_reduce(w);
        EXPECT_LE(r.size(), w.size());
        EXPECT_EQ(free_reduce(r), r);
        EXPECT_EQ(free_reduce(mirror(w)), mirror(r));
    }
}

TEST(Mirror, Examples) {
    EXPECT_EQ(mirror(parse_word("s1 s2^-1", 3)), parse_word("s1^-1 s2", 3));
    EXPECT_TRUE(mirror(BraidWord(3)).empty());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto w = random_word(4, 9, seed);
        EXPECT_EQ(mirror(mirror(w)), w);
    }
}

TEST(RandomWord, Contract) {
    EXPECT_TRUE(random_word(3, 0, 7).empty());
    EXPECT_EQ(random_word(3, 5, 42), random_word(3, 5, 42));
    const auto w = random_word(4, 10, 3);
    EXPECT_EQ(w.size(), 10u);
    for (const auto& l : w.letters()) {
        EXPECT_GE(l.index, 1);
        EXPECT_LE(l.index, 3);
    }
    EXPECT_THROW(random_word(1, 3, 0), BraidError);
}
