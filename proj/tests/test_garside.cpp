#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/burau.hpp"
#include "windbraid/garside.hpp"

using namespace windbraid;

namespace {

std::vector<PermutationBraid> all_simples(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<PermutationBraid> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Every positive word over n strands with exactly `len` letters.
std::vector<BraidWord> positive_words(int n, int len) {
    std::vector<BraidWord> out{BraidWord(n)};
    for (int k = 0; k < len; ++k) {
        std::vector<BraidWord> next;
        for (const auto& w : out)
            for (int i = 1; i < n; ++i) {
                auto v = w;
                v.push_back({i, 1});
                next.push_back(v);
            }
        out.swap(next);
    }
    return out;
}

// a <= b in the prefix order: some positive word p with a p = b. The length
// of p is forced by the exponent sum, so the enumeration is exhaustive.
bool prefix_le(const BraidWord& a, const BraidWord& b) {
    const int len = oracle::exponent_sum(b) - oracle::exponent_sum(a);
    if (len < 0) return false;
    for (const auto& p : positive_words(a.strands(), len)) {
        auto ap = a;
        ap.append(p);
        if (oracle::burau_equal(ap, b)) return true;
    }
    return false;
}

}  // namespace

TEST(Simple, FromWord) {
    EXPECT_EQ(simple_from_word(parse_word("s1", 3)).image(), (std::vector<int>{1, 0, 2}));
    EXPECT_TRUE(simple_from_word(parse_word("s1 s2 s1", 3)).is_delta());
    EXPECT_THROW(simple_from_word(parse_word("s1 s1", 3)), BraidError);
    EXPECT_THROW(simple_from_word(parse_word("s1^-1", 3)), BraidError);
}

TEST(Simple, WordFromSimple) {
    EXPECT_TRUE(word_from_simple(PermutationBraid(3)).empty());
    EXPECT_EQ(print_word(word_from_simple(PermutationBraid::delta(3))), "s1 s2 s1");
    EXPECT_EQ(print_word(word_from_simple(PermutationBraid::generator(4, 1))), "s1");
    for (int n = 2; n <= 5; ++n)
        for (const auto& s : all_simples(n)) {
            const auto w = word_from_simple(s);
            EXPECT_EQ(static_cast<int>(w.size()), s.length());
            EXPECT_EQ(simple_from_word(w), s);
        }
}

TEST(Simple, TauAndComplement) {
    EXPECT_EQ(tau(PermutationBraid::generator(3, 1)), PermutationBraid::generator(3, 2));
    EXPECT_TRUE(right_complement(PermutationBraid(3)).is_delta());
    EXPECT_TRUE(right_complement(PermutationBraid::delta(3)).is_identity());
    for (const auto& s : all_simples(4)) {
        EXPECT_TRUE(s.then(right_complement(s)).is_delta());
        EXPECT_TRUE(product_is_simple(s, right_complement(s)));
        EXPECT_TRUE(left_complement(s).then(s).is_delta());
        EXPECT_EQ(tau(tau(s)), s);
    }
}

TEST(NormalForm, Identity) {
    const auto nf = left_normal_form(BraidWord(3));
    EXPECT_EQ(nf.infimum, 0);
    EXPECT_TRUE(nf.factors.empty());
    EXPECT_EQ(inf_sup(BraidWord(3)), (InfSup{0, 0, 0}));
}

TEST(NormalForm, MixedSquare) {
    const auto w = parse_word("s1 s2^-1 s1 s2^-1", 3);
    const auto nf = left_normal_form(w);
    EXPECT_EQ(nf.infimum, -2);
    EXPECT_EQ(nf.supremum(), 2);
    EXPECT_EQ(nf.factors.size(), 4u);
    EXPECT_EQ(inf_sup(w), (InfSup{-2, 2, 4}));
}

TEST(NormalForm, InverseGeneratorAgainstPrefixOracle) {
    const auto w = parse_word("s1^-1", 3);
    const auto nf = left_normal_form(w);
    ASSERT_EQ(nf.infimum, -1);
    ASSERT_EQ(nf.factors.size(), 1u);
    EXPECT_EQ(nf.factors[0], simple_from_word(parse_word("s1 s2", 3)));
    // Delta^-1 <= s1^-1 <= Delta^0, and neither bound can be tightened.
    EXPECT_TRUE(prefix_le(delta_power_word(3, -1), w));
    EXPECT_TRUE(prefix_le(w, BraidWord(3)));
    EXPECT_FALSE(prefix_le(BraidWord(3), w));
    EXPECT_FALSE(prefix_le(w, delta_power_word(3, -1)));
}

TEST(NormalForm, InfSupMatchesPrefixOracleOnB3) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto w = random_word(3, 4, seed);
        const auto is = inf_sup(w);
        EXPECT_TRUE(prefix_le(delta_power_word(3, is.inf), w)) << print_word(w);
        EXPECT_FALSE(prefix_le(delta_power_word(3, is.inf + 1), w)) << print_word(w);
        EXPECT_TRUE(prefix_le(w, delta_power_word(3, is.sup))) << print_word(w);
        EXPECT_FALSE(prefix_le(w, delta_power_word(3, is.sup - 1))) << print_word(w);
    }
}

TEST(NormalForm, DeltaValues) {
    EXPECT_EQ(inf_sup(delta_word(3)), (InfSup{1, 1, 1}));
    for (int n = 2; n <= 5; ++n)
        for (int k = -3; k <= 3; ++k) {
            const auto is = inf_sup(delta_power_word(n, k));
            EXPECT_EQ(is.inf, k);
            EXPECT_EQ(is.sup, k);
            EXPECT_EQ(is.garside_length, std::abs(k));
        }
}

TEST(NormalForm, LeftWeightedFixedPointAndEqualToInput) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto w = random_word(n, 14, seed);
        const auto nf = left_normal_form(w);
        for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j)
            EXPECT_TRUE(is_left_weighted(nf.factors[j], nf.factors[j + 1]));
        for (const auto& f : nf.factors) {
            EXPECT_FALSE(f.is_identity());
            EXPECT_FALSE(f.is_delta());
        }
        const auto back = word_from_normal_form(nf);
        EXPECT_EQ(left_normal_form(back), nf);
        EXPECT_TRUE(oracle::burau_equal(back, w));
        EXPECT_EQ(left_normal_form(free_reduce(w)), nf);
    }
}

TEST(NormalForm, RightNormalForm) {
    EXPECT_EQ(right_normal_form(BraidWord(3)).infimum, 0);
    EXPECT_TRUE(right_normal_form(BraidWord(3)).factors.empty());
    for (const auto& s : all_simples(4)) {
        if (s.is_identity() || s.is_delta()) continue;
        const auto nf = right_normal_form(word_from_simple(s));
        EXPECT_EQ(nf.infimum, 0);
        ASSERT_EQ(nf.factors.size(), 1u);
        EXPECT_EQ(nf.factors[0], s);
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto w = random_word(n, 14, seed);
        const auto r = right_normal_form(w);
        const auto l = left_normal_form(w);
        EXPECT_EQ(r.infimum, l.infimum);
        EXPECT_EQ(r.supremum(), l.supremum());
        for (std::size_t j = 0; j + 1 < r.factors.size(); ++j)
            EXPECT_TRUE(is_right_weighted(r.factors[j], r.factors[j + 1]));
        EXPECT_TRUE(equals(word_from_right_normal_form(r), w));
    }
}

TEST(NormalForm, DeltaShift) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto w = random_word(n, 12, seed);
        const int k = static_cast<int>(seed % 7) - 3;
        auto wk = w;
        wk.append(delta_power_word(n, k));
        const auto a = inf_sup(w), b = inf_sup(wk);
        EXPECT_EQ(b.inf, a.inf + k);
        EXPECT_EQ(b.sup, a.sup + k);
    }
}

TEST(NormalForm, PositiveLengthBound) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto w = random_word(4, 10, seed);
        w = mirror(w);
        BraidWord pos(4);
        for (const auto& l : w.letters()) pos.push_back({l.index, 1});
        EXPECT_LE(inf_sup(pos).garside_length, static_cast<int>(pos.size()));
    }
}

TEST(Equals, Examples) {
    EXPECT_TRUE(equals(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3)));
    EXPECT_FALSE(equals(parse_word("s1 s2", 3), parse_word("s2 s1", 3)));
    EXPECT_THROW(equals(BraidWord(3), BraidWord(4)), BraidError);
    const auto w = random_word(4, 15, 9);
    EXPECT_TRUE(equals(w, free_reduce(w)));
}

TEST(Equals, CongruenceUnderRandomRewriting) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 3;
        auto letters = random_word(n, 10, static_cast<std::uint64_t>(trial)).letters();
        const BraidWord original(n, letters);
        for (int step = 0; step < 6; ++step) {
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
            const auto pos = letters.begin() + static_cast<long>(rng() % (letters.size() + 1));
            switch (rng() % 3) {
                case 0:  // insert s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1
                    letters.insert(pos, {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}});
                    break;
                case 1:
                    letters.insert(pos, {{i, 1}, {i, -1}});
                    break;
                default:
                    if (n >= 4 && i + 2 <= n - 1)
                        letters.insert(pos, {{i, 1}, {i + 2, 1}, {i, -1}, {i + 2, -1}});
                    break;
            }
        }
        EXPECT_TRUE(equals(BraidWord(n, letters), original));
    }
}

TEST(TauLength, Examples) {
    EXPECT_EQ(tau_length(parse_word("s1", 3)), 1);
    EXPECT_EQ(tau_length(delta_word(3)), 1);
    EXPECT_EQ(tau_length(parse_word("s1 s3", 4)), 2);
    // no single round half twist equals s1 s3
    const auto target = simple_from_word(parse_word("s1 s3", 4));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            EXPECT_NE(simple_from_word(half_twist_word(4, i, j)), target);
    EXPECT_EQ(tau_length(BraidWord(4)), 0);
    EXPECT_FALSE(simple_tau_length(simple_from_word(parse_word("s1 s2", 5)), 1).has_value());
}
