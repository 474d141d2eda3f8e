#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles/burau.hpp"
#include "windbraid/garside.hpp"
#include "windbraid/relaxation.hpp"
#include "windbraid/winding_labels.hpp"

using namespace windbraid;

namespace {

BraidWord w(const char* text, int n) { return parse_word(text, n); }

bool related(const BelowOrder& o, int p, int q) {
    return std::find(o.relation.begin(), o.relation.end(), std::pair{p, q}) != o.relation.end();
}

bool all_signs(const BraidWord& word, int sign) {
    return std::all_of(word.letters().begin(), word.letters().end(), [&](const Letter& l) { return l.sign == sign; });
}

// Simple braid test independent of the Garside code: the positive word
// crosses every pair of strands at most once.
bool is_simple_word(const BraidWord& word) {
    const int n = word.strands();
    std::vector<int> at(n);
    for (int k = 0; k < n; ++k) at[k] = k;
    std::vector<std::vector<int>> crossed(n, std::vector<int>(n, 0));
    for (const auto& l : word.letters()) {
        if (l.sign < 0) return false;
        int& a = at[l.index - 1];
        int& b = at[l.index];
        if (++crossed[std::min(a, b)][std::max(a, b)] > 1) return false;
        std::swap(a, b);
    }
    return true;
}

}  // namespace

TEST(BelowOrder, TrivialIsEmpty) {
    for (int n = 1; n <= 5; ++n) {
        auto o = below_order(trivial_diagram(n));
        EXPECT_TRUE(o.relation.empty());
        for (int k = 0; k < n; ++k) EXPECT_EQ(o.rank[k], n - k);  // left to right after the rotation
    }
}

TEST(BelowOrder, SigmaOne) {
    auto o = below_order(diagram_of(w("s1", 3)));
    EXPECT_TRUE(related(o, 1, 2) || related(o, 2, 1));
    EXPECT_FALSE(related(o, 1, 2) && related(o, 2, 1));
    // puncture 3 shares the last segment with puncture 2, so it is ordered too
    EXPECT_TRUE(related(o, 3, 2));
    EXPECT_EQ(relax_step_down(diagram_of(w("s1", 3))).first.applied_word, w("s1^-1", 3));
}

TEST(BelowOrder, AcyclicAndExtended) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto d = diagram_of(random_word(n, 1 + static_cast<int>(rng() % 20), rng()));
        BelowOrder o;
        ASSERT_NO_THROW(o = below_order(d));
        for (auto [p, q] : o.relation) {
            EXPECT_NE(p, q);
            EXPECT_LT(o.rank[p - 1], o.rank[q - 1]);
            EXPECT_FALSE(related(o, q, p));
        }
    }
}

TEST(Relax, DownOnDelta) {
    auto [step, next] = relax_step_down(diagram_of(delta_word(3)));
    EXPECT_TRUE(next.is_trivial());
    EXPECT_EQ(step.kind, RelaxationStep::Kind::Down);
    EXPECT_TRUE(step.move.is_delta());
}

TEST(Relax, DownOnSigmaOneSigmaTwo) {
    auto [step, next] = relax_step_down(diagram_of(w("s1 s2", 3)));
    EXPECT_TRUE(next.is_trivial());
}

TEST(Relax, PreconditionsEnforced) {
    EXPECT_THROW(relax_step_down(trivial_diagram(3)), BraidError);
    EXPECT_THROW(relax_step_down(diagram_of(w("s1 s2^-1", 3))), BraidError);
    EXPECT_THROW(relax_step_up(diagram_of(w("s1", 3))), BraidError);
    EXPECT_THROW(relax_step_up(trivial_diagram(3)), BraidError);
}

TEST(Relax, DownStepsOnPositiveB3) {
    // every positive word up to length 6
    std::function<void(BraidWord)> visit = [&](BraidWord word) {
        auto d = diagram_of(word);
        auto ext = extreme_labels(d);
        int steps = 0;
        while (!d.is_trivial()) {
            ASSERT_LE(steps, 8) << print_word(word);
            auto [step, next] = relax_step_down(d);
            EXPECT_TRUE(all_signs(step.applied_word, -1));
            EXPECT_TRUE(is_simple_word(step.applied_word.inverse()));
            const auto after = extreme_labels(next);
            EXPECT_EQ(after.largest, ext.largest - 1) << print_word(word);
            EXPECT_GE(after.smallest, 0) << print_word(word);
            d = next;
            ext = after;
            ++steps;
        }
        EXPECT_EQ(steps, inf_sup(word).garside_length) << print_word(word);
        if (word.size() == 6) return;
        for (int i = 1; i <= 2; ++i) {
            auto longer = word;
            longer.push_back({i, 1});
            visit(longer);
        }
    };
    visit(BraidWord(3));
}

TEST(Relax, DownStepsAfterDeltaShift) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        auto word = random_word(n, 1 + static_cast<int>(rng() % 20), rng());
        const auto is = inf_sup(word);
        word.append(delta_power_word(n, -is.inf));
        auto d = diagram_of(word);
        int steps = 0;
        while (!d.is_trivial()) {
            const auto before = extreme_labels(d);
            auto [step, next] = relax_step_down(d);
            const auto after = extreme_labels(next);
            ASSERT_EQ(after.largest, before.largest - 1) << print_word(word);
            ASSERT_GE(after.smallest, 0);
            d = next;
            ++steps;
        }
        EXPECT_EQ(steps, is.sup - is.inf);
    }
}

TEST(Relax, UpSteps) {
    EXPECT_TRUE(relax_step_up(diagram_of(delta_power_word(3, -1))).second.is_trivial());
    EXPECT_TRUE(relax_step_up(diagram_of(w("s1^-1 s2^-1", 3))).second.is_trivial());
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        auto positive = random_word(n, 1 + static_cast<int>(rng() % 12), rng());
        BraidWord negative(n);
        for (auto l : positive.letters()) negative.push_back({l.index, -1});
        auto d = diagram_of(negative);
        while (!d.is_trivial()) {
            const auto before = extreme_labels(d);
            auto [step, next] = relax_step_up(d);
            EXPECT_TRUE(all_signs(step.applied_word, 1));
            EXPECT_TRUE(is_simple_word(step.applied_word));
            const auto after = extreme_labels(next);
            ASSERT_EQ(after.smallest, before.smallest + 1) << print_word(negative);
            ASSERT_LE(after.largest, 0);
            d = next;
        }
    }
}

TEST(Geodesic, Identity) { EXPECT_TRUE(geodesic_factorization(BraidWord(4)).empty()); }

TEST(Geodesic, MixedSquare) {
    const auto beta = w("s1 s2^-1 s1 s2^-1", 3);
    const auto f = geodesic_factorization(beta);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0].sign, 1);
    EXPECT_EQ(f[1].sign, 1);
    EXPECT_EQ(f[2].sign, -1);
    EXPECT_EQ(f[3].sign, -1);
    EXPECT_TRUE(oracle::burau_equal(word_from_factors(3, f), beta));
}

TEST(Geodesic, RandomWords) {
    std::mt19937_64 rng(10);
    for (int n = 3; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            const auto word = random_word(n, 1 + static_cast<int>(rng() % 20), rng());
            const auto f = geodesic_factorization(word);
            EXPECT_EQ(static_cast<int>(f.size()), inf_sup(word).garside_length) << print_word(word);
            EXPECT_TRUE(oracle::burau_equal(word_from_factors(n, f), word)) << print_word(word);
            for (const auto& g : f) EXPECT_FALSE(g.simple.is_identity());
        }
}

TEST(Geodesic, Json) {
    const auto text = factors_to_json(geodesic_factorization(w("s1 s2^-1", 3)));
    EXPECT_NE(text.find("\"sign\":-1"), std::string::npos);
    EXPECT_NE(text.find("\"image\""), std::string::npos);
}

TEST(FromDiagram, RoundTrip) {
    EXPECT_TRUE(braid_from_diagram(trivial_diagram(4)).empty());
    EXPECT_TRUE(oracle::burau_equal(braid_from_diagram(diagram_of(delta_word(4))), delta_word(4)));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto word = random_word(n, static_cast<int>(rng() % 20), rng());
        const auto back = braid_from_diagram(diagram_of(word));
        EXPECT_TRUE(oracle::burau_equal(back, word)) << print_word(word);
        EXPECT_EQ(diagram_of(back), diagram_of(word));
    }
}

TEST(Untangle, AlreadyUntangled) {
    const auto d = trivial_diagram(4);
    EXPECT_TRUE(is_completely_untangled(d, 2, 4));
    const auto r = untangle_subdisk(d, 2, 4);
    EXPECT_TRUE(r.word.empty());
    EXPECT_EQ(r.diagram, d);
}

TEST(Untangle, SigmaTwoSquared) {
    const auto d = diagram_of(w("s2 s2", 3));
    EXPECT_FALSE(is_completely_untangled(d, 2, 3));
    const auto r = untangle_subdisk(d, 2, 3);
    EXPECT_FALSE(r.word.empty());
    for (const auto& l : r.word.letters()) EXPECT_NE(l.index, 1);
    EXPECT_TRUE(is_completely_untangled(r.diagram, 2, 3));
}

TEST(Untangle, StaysOnTheDisk) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        // random word in s2 .. s_{n-1}, and random words touching s1
        auto word = shift_indices(random_word(n - 1, 1 + static_cast<int>(rng() % 15), rng()), 1, n);
        if (trial % 2) word = random_word(n, 1 + static_cast<int>(rng() % 15), rng());
        const auto d = diagram_of(word);
        const auto sub = subdisk_labels(d, 2, n);
        const auto r = untangle_subdisk(d, 2, n);
        for (const auto& l : r.word.letters()) EXPECT_GE(l.index, 2);
        EXPECT_TRUE(is_completely_untangled(r.diagram, 2, n));
        EXPECT_LE(r.steps, std::max(sub.largest, 0) - std::min(sub.smallest, 0) + 1);
        EXPECT_EQ(apply_word(d, r.word), r.diagram);
    }
}
