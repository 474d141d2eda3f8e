// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. WINDBRAID_SEED changes the random suites.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>

#include "windbraid/garside.hpp"
#include "windbraid/harness.hpp"
#include "windbraid/relaxation.hpp"
#include "windbraid/sigma_definite.hpp"
#include "windbraid/winding_labels.hpp"

using namespace windbraid;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

// Words checked by criteria 2, 3, 5 and 8, with their diagrams.
struct Case {
    BraidWord word;
    CurveDiagram diagram;
};

std::vector<Case> exhaustive_b3;
std::vector<Case> random_b456;
std::uint64_t base_seed = 0;

std::string first_of(const std::vector<std::string>& examples) {
    return examples.empty() ? std::string() : "; first: " + examples.front();
}

// Collects violations from worker threads, keeping the first few examples.
struct Tally {
    std::mutex m;
    long count = 0;
    std::vector<std::string> examples;

    void add(const std::string& what) {
        std::lock_guard lock(m);
        ++count;
        if (examples.size() < 3) examples.push_back(what);
    }
};

std::vector<BraidWord> random_words(int n, int count, int max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    for (int k = 0; k < count; ++k) {
        const auto s = rng();
        out.push_back(random_word(n, 1 + static_cast<int>(rng() % max_len), s));
    }
    return out;
}

int count_index(const BraidWord& w, int index, int sign) {
    int c = 0;
    for (const auto& l : w.letters()) c += l.index == index && l.sign == sign;
    return c;
}

Outcome criterion1() {
    Clock clock;
    const auto beta = parse_word("s1 s2^-1 s1 s2^-1", 3);
    const auto d = diagram_of(beta);
    const auto e = extreme_labels(d);
    const auto is = inf_sup(beta);
    const auto st = extremal_arc_stats(d);
    const double t = clock.seconds();
    std::ostringstream s;
    s << "labels " << e.smallest << ".." << e.largest << ", inf " << is.inf << ", sup " << is.sup << ", length "
      << is.garside_length << ", segments at 2: " << st.count_largest << ", at -2: " << st.count_smallest << ", "
      << t << " s";
    const bool pass = e == ExtremeLabels{2, -2} && is == InfSup{-2, 2, 4} && st.count_largest == 1 &&
                      st.count_smallest == 1 && t < 1.0;
    return {pass, s.str()};
}

Outcome labels_equal_sup_inf(const std::vector<Case>& cases, double limit) {
    Clock clock;
    Tally bad;
    parallel_for(static_cast<long>(cases.size()), [&](long k) {
        const auto& c = cases[k];
        const auto is = inf_sup(c.word);
        const auto e = extreme_labels(c.diagram);
        if (e.largest != is.sup || e.smallest != is.inf) bad.add(print_word(c.word));
    });
    const double t = clock.seconds();
    std::ostringstream s;
    s << cases.size() << " words, " << bad.count << " mismatches, " << t << " s (limit " << limit << " s)"
      << first_of(bad.examples);
    return {bad.count == 0 && t < limit, s.str()};
}

Outcome criterion4() {
    Clock clock;
    long words = 0, steps_total = 0;
    std::vector<std::string> bad;
    std::function<void(BraidWord)> visit = [&](BraidWord w) {
        ++words;
        auto d = diagram_of(w);
        auto before = extreme_labels(d);
        int steps = 0;
        bool ok = true;
        while (!d.is_trivial() && steps <= static_cast<int>(w.size())) {
            auto [step, next] = relax_step_down(d);
            const auto after = extreme_labels(next);
            ok = ok && after.largest == before.largest - 1 && after.smallest >= 0;
            d = std::move(next);
            before = after;
            ++steps;
        }
        steps_total += steps;
        if (!ok || !d.is_trivial() || steps != inf_sup(w).garside_length) bad.push_back(print_word(w));
        if (w.size() == 6) return;
        for (int i = 1; i <= 2; ++i) {
            auto longer = w;
            longer.push_back({i, 1});
            visit(longer);
        }
    };
    visit(BraidWord(3));
    std::ostringstream s;
    s << words << " positive words, " << steps_total << " steps, " << bad.size() << " violations, " << clock.seconds()
      << " s" << first_of(bad);
    return {bad.empty(), s.str()};
}

Outcome criterion5() {
    Clock clock;
    long cases = 0;
    Tally count_bad, distinct_bad;
    for (const auto* suite : {&exhaustive_b3, &random_b456}) {
        cases += static_cast<long>(suite->size());
        parallel_for(static_cast<long>(suite->size()), [&](long k) {
            const auto& c = (*suite)[k];
            const int n = c.word.strands();
            const auto st = extremal_arc_stats(c.diagram);
            if (st.count_largest > n - 1 || st.count_smallest > n - 1)
                count_bad.add("B" + std::to_string(n) + " " + print_word(c.word));
            auto slots = st.proper_right_slots_largest;
            std::sort(slots.begin(), slots.end());
            if (std::adjacent_find(slots.begin(), slots.end()) != slots.end())
                distinct_bad.add("B" + std::to_string(n) + " " + print_word(c.word));
        });
    }
    std::ostringstream s;
    s << cases << " words, " << count_bad.count << " with more than n-1 extremal segments, " << distinct_bad.count
      << " with repeated right extremities, " << clock.seconds() << " s" << first_of(count_bad.examples)
      << first_of(distinct_bad.examples);
    return {count_bad.count == 0 && distinct_bad.count == 0, s.str()};
}

Outcome criterion6() {
    Clock clock;
    long cases = 0;
    Tally bad;
    for (int n = 3; n <= 5; ++n) {
        const auto words = random_words(n, 500, 20, base_seed + 600 + n);
        cases += static_cast<long>(words.size());
        parallel_for(static_cast<long>(words.size()), [&](long k) {
            const auto& w = words[k];
            const auto is = inf_sup(w);
            const auto f = geodesic_factorization(w);
            const int expected = std::max(is.sup, 0) - std::min(is.inf, 0);
            if (static_cast<int>(f.size()) != expected || !equals(word_from_factors(n, f), w))
                bad.add(print_word(w));
        });
    }
    std::ostringstream s;
    s << cases << " words, " << bad.count << " violations, " << clock.seconds() << " s" << first_of(bad.examples);
    return {bad.count == 0, s.str()};
}

Outcome criterion7() {
    Clock clock;
    long cases = 0;
    Tally unequal, indefinite, over_count;
    std::ostringstream s;
    for (int n = 3; n <= 5; ++n) {
        const auto words = random_words(n, 500, 20, base_seed + 700 + n);
        cases += static_cast<long>(words.size());
        std::vector<double> ratio(words.size(), 0);
        std::vector<int> len_in(words.size(), 0), len_out(words.size(), 0);
        parallel_for(static_cast<long>(words.size()), [&](long k) {
            const auto& w = words[k];
            const auto out = sigma_definite_word(w);
            const auto is = inf_sup(w);
            if (!equals(out, w)) unequal.add(print_word(w));
            if (!is_sigma_definite(out)) indefinite.add(print_word(w));
            const int pos = count_index(out, 1, 1), neg = count_index(out, 1, -1);
            // a sigma_1-negative word is bounded through its mirror image
            if (pos > std::max(is.sup, 0) || neg > std::max(-is.inf, 0)) over_count.add(print_word(w));
            len_in[k] = is.garside_length;
            len_out[k] = static_cast<int>(out.size());
            if (is.garside_length > 0) ratio[k] = double(out.size()) / (double(is.garside_length) * is.garside_length);
            else if (!out.empty()) indefinite.add("nonempty output for the identity: " + print_word(w));
        });
        // least-squares C for len = C l^2, then the smallest C dominating every case
        double num = 0, den = 0, c_max = 0;
        for (std::size_t k = 0; k < words.size(); ++k) {
            const double l2 = double(len_in[k]) * len_in[k];
            num += l2 * len_out[k];
            den += l2 * l2;
            c_max = std::max(c_max, ratio[k]);
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "C(%d) = %.2f (fit %.2f)", n, c_max, den > 0 ? num / den : 0.0);
        s << buf << ", ";
    }
    s << cases << " words, " << unequal.count << " unequal, " << indefinite.count << " not sigma-definite, "
      << over_count.count << " over the sigma_1 count bound, " << clock.seconds() << " s"
      << first_of(unequal.examples) << first_of(indefinite.examples) << first_of(over_count.examples);
    return {unequal.count == 0 && indefinite.count == 0 && over_count.count == 0, s.str()};
}

Outcome criterion8() {
    Clock clock;
    long cases = 0;
    Tally bad;
    for (const auto* suite : {&exhaustive_b3, &random_b456}) {
        cases += static_cast<long>(suite->size());
        parallel_for(static_cast<long>(suite->size()), [&](long k) {
            const auto& c = (*suite)[k];
            if (dehornoy_sign(c.diagram) != handle_reduction_sign(c.word)) bad.add(print_word(c.word));
        });
    }
    std::ostringstream s;
    s << cases << " words, " << bad.count << " mismatches, " << clock.seconds() << " s" << first_of(bad.examples);
    return {bad.count == 0, s.str()};
}

Outcome criterion9() {
    Clock clock;
    std::mt19937_64 rng(base_seed + 900);
    long violations = 0, reductions = 0;
    std::vector<std::string> bad;
    auto report = [&](const std::string& what) {
        ++violations;
        if (bad.size() < 3) bad.push_back(what);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const auto base = random_word(n, static_cast<int>(rng() % 13), rng());
        const auto d = diagram_of(base);
        const int i = 1 + static_cast<int>(rng() % (n - 2));
        auto act = [&](const char* text) { return apply_word(d, parse_word(text, n)); };
        const auto si = "s" + std::to_string(i), sj = "s" + std::to_string(i + 1);
        if (apply_word(d, parse_word(si + " " + sj + " " + si, n)) != apply_word(d, parse_word(sj + " " + si + " " + sj, n)))
            report("braid relation at " + si + " on " + print_word(base));
        const int a = 1 + static_cast<int>(rng() % (n - 1));
        const int b = 1 + static_cast<int>(rng() % (n - 1));
        if (std::abs(a - b) >= 2) {
            const auto sa = "s" + std::to_string(a) + "^-1", sb = "s" + std::to_string(b);
            if (apply_word(d, parse_word(sa + " " + sb, n)) != apply_word(d, parse_word(sb + " " + sa, n)))
                report("far commutation on " + print_word(base));
        }
        if (act((si + " " + si + "^-1").c_str()) != d || act((si + "^-1 " + si).c_str()) != d)
            report("inverse cancellation on " + print_word(base));
        const auto raw = half_twist_unreduced(d, a, rng() % 2 == 0);
        const auto reference = reduce(raw);
        if (!validate(reference).empty()) report("reduce gives an invalid diagram on " + print_word(base));
        for (int order = 0; order < 10; ++order) {
            ++reductions;
            if (reduce_shuffled(raw, rng()) != reference) {
                report("reduction order matters on " + print_word(base));
                break;
            }
        }
    }
    std::ostringstream s;
    s << "1000 instances, " << reductions << " shuffled reductions, " << violations << " violations, "
      << clock.seconds() << " s" << first_of(bad);
    return {violations == 0, s.str()};
}

Outcome criterion10() {
    Clock clock;
    long braids = 0, moves = 0, supporting = 0, exhausted = 0, candidates = 0, skipped = 0;
    std::vector<std::string> errors;
    std::string first_candidate;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        try {
            const auto r = conjecture_experiment(3, 10, base_seed + seed, 100000);
            braids += r.braids;
            moves += r.moves;
            supporting += r.supporting;
            exhausted += r.budget_exhausted;
            skipped += r.skipped;
            candidates += static_cast<long>(r.candidates.size());
            if (first_candidate.empty() && !r.candidates.empty()) {
                const auto& c = r.candidates.front();
                first_candidate = c.word + " with " + c.beta_plus + " on disk " + std::to_string(c.first) + ".." +
                                  std::to_string(c.last) + ", tau-length " + std::to_string(c.tau_before) + " -> " +
                                  std::to_string(c.tau_after);
            }
            errors.insert(errors.end(), r.errors.begin(), r.errors.end());
        } catch (const std::exception& e) {
            errors.push_back(e.what());
        }
    }
    std::ostringstream s;
    s << "EXPERIMENTAL, 100 seeds, " << braids << " braids (" << skipped << " untangled), " << moves
      << " tangledness-lowering moves: " << supporting << " shorter, " << candidates << " counterexample candidates, "
      << exhausted << " over budget, " << errors.size() << " errors, " << clock.seconds() << " s";
    if (!first_candidate.empty()) s << "; first candidate: " << first_candidate;
    if (!errors.empty()) s << "; first error: " << errors.front();
    return {errors.empty(), s.str()};
}

}  // namespace

int main() {
    base_seed = seed_from_env(20240101);
    std::cout << "acceptance suite, seed " << base_seed << std::endl;

    for_each_word(3, 6, [](const BraidWord& w) { exhaustive_b3.push_back({w, trivial_diagram(3)}); });
    for (int n = 4; n <= 6; ++n)
        for (auto& w : random_words(n, 1000, 20, base_seed + n)) random_b456.push_back({w, trivial_diagram(n)});

    // diagrams are shared by criteria 2, 3, 5 and 8; criteria 2 and 3 time them
    auto build = [](std::vector<Case>& cases) {
        parallel_for(static_cast<long>(cases.size()), [&](long k) { cases[k].diagram = diagram_of(cases[k].word); });
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"labels of (s1 s2^-1)^2 in B3", criterion1},
        {"extreme labels = (sup, inf), all B3 words of length <= 6",
         [&] {
             Clock clock;
             build(exhaustive_b3);
             auto o = labels_equal_sup_inf(exhaustive_b3, 180 - clock.seconds());
             o.detail += ", diagrams " + std::to_string(clock.seconds()) + " s total";
             return o;
         }},
        {"extreme labels = (sup, inf), 1000 random words each in B4, B5, B6",
         [&] {
             Clock clock;
             build(random_b456);
             auto o = labels_equal_sup_inf(random_b456, 600 - clock.seconds());
             o.detail += ", diagrams " + std::to_string(clock.seconds()) + " s total";
             return o;
         }},
        {"down-relaxation on positive B3 words", criterion4},
        {"extremal-arc scarcity on the suites of 2 and 3", criterion5},
        {"geodesic factorization", criterion6},
        {"sigma-definite representatives", criterion7},
        {"Dehornoy sign: diagram vs handle reduction", criterion8},
        {"group-action soundness and confluent reduction", criterion9},
        {"tangledness / tau-length experiment", criterion10},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first
                  << ": " << o.detail << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
