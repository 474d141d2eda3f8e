#include "windbraid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "windbraid/garside.hpp"
#include "windbraid/relaxation.hpp"
#include "windbraid/sigma_definite.hpp"

namespace windbraid {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string pair_text(const ExtremeLabels& e) { return pair_text(e.largest, e.smallest); }

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("WINDBRAID_SEED");
    if (!env) return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (env[used] == '\0') return v;
    } catch (const std::exception&) {
    }
    throw BraidError(std::string("WINDBRAID_SEED is not a number: ") + env);
}

void parallel_for(long count, const std::function<void(long)>& f, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, std::max(1L, count)));
    std::atomic<long> next{0};
    auto work = [&] {
        for (long k; (k = next.fetch_add(1)) < count;) f(k);
    };
    if (threads == 1) return work();
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
}

void for_each_word(int n, int max_len, const std::function<void(const BraidWord&)>& f) {
    const int letters = 2 * (n - 1);
    for (int len = 0; len <= max_len; ++len) {
        std::vector<int> digit(len, 0);
        while (true) {
            BraidWord w(n);
            for (int k : digit) w.push_back({k / 2 + 1, k % 2 ? -1 : 1});
            f(w);
            int pos = len - 1;
            while (pos >= 0 && ++digit[pos] == letters) digit[pos--] = 0;
            if (pos < 0) break;
        }
    }
}

std::vector<Failure> check_word(const BraidWord& w, std::uint64_t seed) {
    const int n = w.strands();
    std::vector<Failure> out;
    auto fail = [&](const char* check, std::string expected, std::string actual) {
        out.push_back({check, print_word(w), n, seed, std::move(expected), std::move(actual)});
    };
    auto guarded = [&](const char* check, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(check, "no exception", e.what());
        }
    };

    CurveDiagram d = trivial_diagram(n);
    InfSup is;
    try {
        d = diagram_of(w);
        is = inf_sup(w);
    } catch (const std::exception& e) {
        fail("setup", "no exception", e.what());
        return out;
    }
    const auto ext = extreme_labels(d);

    guarded("labels", [&] {
        if (ext != ExtremeLabels{is.sup, is.inf}) fail("labels", pair_text(is.sup, is.inf), pair_text(ext));
    });
    guarded("mirror", [&] {
        const auto m = mirror_diagram(d);
        const auto em = extreme_labels(m);
        if (em != ExtremeLabels{-ext.smallest, -ext.largest})
            fail("mirror", pair_text(-ext.smallest, -ext.largest), pair_text(em));
        if (diagram_of(mirror(w)) != m) fail("mirror", "diagram of mirror = mirrored diagram", "differs");
    });
    guarded("delta_shift", [&] {
        const auto es = extreme_labels(apply_word(d, delta_word(n)));
        if (es != ExtremeLabels{ext.largest + 1, ext.smallest + 1})
            fail("delta_shift", pair_text(ext.largest + 1, ext.smallest + 1), pair_text(es));
    });
    guarded("extremal_arcs", [&] {
        const auto st = extremal_arc_stats(d);
        if (st.count_largest > n - 1)
            fail("extremal_arcs", "largest-label segments <= " + std::to_string(n - 1),
                 std::to_string(st.count_largest));
        if (st.count_smallest > n - 1)
            fail("extremal_arcs", "smallest-label segments <= " + std::to_string(n - 1),
                 std::to_string(st.count_smallest));
        if (!all_distinct(st.proper_right_slots_largest))
            fail("extremal_arcs", "distinct right extremities", "repeated");
    });
    guarded("relaxation", [&] {
        auto r = apply_word(d, delta_power_word(n, -is.inf));
        const int expected = is.sup - is.inf;
        int steps = 0;
        while (!r.is_trivial() && steps <= expected) {
            const auto before = extreme_labels(r);
            auto [step, next] = relax_step_down(r);
            const auto after = extreme_labels(next);
            if (after.largest != before.largest - 1 || after.smallest < 0) {
                fail("relaxation", "step lowers LL by 1, SL >= 0", pair_text(before) + " -> " + pair_text(after));
                return;
            }
            r = std::move(next);
            ++steps;
        }
        if (steps != expected || !r.is_trivial())
            fail("relaxation", std::to_string(expected) + " steps", std::to_string(steps) + " steps");
    });
    guarded("sign", [&] {
        const auto a = dehornoy_sign(d);
        const auto b = handle_reduction_sign(w);
        if (a != b) fail("sign", sign_name(b), sign_name(a));
    });
    guarded("round_trip", [&] {
        if (parse_word(print_word(w), n) != w) fail("round_trip", "word text", "differs");
        if (diagram_from_json(diagram_to_json(d)) != d) fail("round_trip", "diagram json", "differs");
        if (diagram_of(braid_from_diagram(d)) != d) fail("round_trip", "braid from diagram", "differs");
    });
    return out;
}

ValidationReport run_cross_validation(int n, long count, int max_len, std::uint64_t seed, unsigned threads) {
    if (n < 2) throw BraidError("run_cross_validation: need n >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<BraidWord, std::uint64_t>> cases;
    if (n == 3 && max_len <= 6) for_each_word(3, max_len, [&](const BraidWord& w) { cases.emplace_back(w, 0); });
    std::mt19937_64 rng(seed);
    for (long k = 0; k < count; ++k) {
        const std::uint64_t s = rng();
        const int len = static_cast<int>(rng() % (static_cast<std::uint64_t>(std::max(max_len, 0)) + 1));
        cases.emplace_back(random_word(n, len, s), s);
    }

    std::vector<std::vector<Failure>> found(cases.size());
    parallel_for(static_cast<long>(cases.size()),
                 [&](long k) { found[k] = check_word(cases[k].first, cases[k].second); }, threads);

    ValidationReport r;
    r.suite = "B" + std::to_string(n) + " cross-validation";
    r.cases = static_cast<long>(cases.size());
    for (auto& f : found) r.failures.insert(r.failures.end(), f.begin(), f.end());
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string report_to_json(const ValidationReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["ok"] = r.ok();
    auto fs = ordered_json::array();
    for (const auto& f : r.failures)
        fs.push_back({{"check", f.check},
                      {"word", f.word},
                      {"strands", f.strands},
                      {"seed", f.seed},
                      {"expected", f.expected},
                      {"actual", f.actual}});
    j["failures"] = fs;
    j["seconds"] = r.seconds;
    return j.dump();
}

ValidationReport validation_report_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        ValidationReport r;
        r.suite = j.at("suite").get<std::string>();
        r.cases = j.at("cases").get<long>();
        r.seconds = j.at("seconds").get<double>();
        for (const auto& f : j.at("failures"))
            r.failures.push_back({f.at("check").get<std::string>(), f.at("word").get<std::string>(),
                                  f.at("strands").get<int>(), f.at("seed").get<std::uint64_t>(),
                                  f.at("expected").get<std::string>(), f.at("actual").get<std::string>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw BraidError(std::string("validation_report_from_json: ") + e.what());
    }
}

ConjectureReport conjecture_on(const BraidWord& w, long budget) {
    const int n = w.strands();
    ConjectureReport rep;
    rep.strands = n;
    rep.braids = 1;
    try {
        const auto d = diagram_of(w);
        const auto tau0 = tau_length(w, budget);
        bool tangled = false;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int t = tangledness(d, i, j);
                if (t <= 0) continue;
                tangled = true;
                std::vector<int> perm(j - i + 1);
                std::iota(perm.begin(), perm.end(), 0);
                while (std::next_permutation(perm.begin(), perm.end())) {
                    std::vector<int> image(n);
                    std::iota(image.begin(), image.end(), 0);
                    for (std::size_t a = 0; a < perm.size(); ++a) image[i - 1 + a] = i - 1 + perm[a];
                    const auto simple = word_from_simple(PermutationBraid(image));
                    for (int sign : {1, -1}) {
                        const auto plus = sign > 0 ? simple : simple.inverse();
                        const int t2 = tangledness(apply_word(d, plus), i, j);
                        if (t2 >= t) continue;
                        ++rep.moves;
                        auto product = w;
                        product.append(plus);
                        const auto tau1 = tau_length(product, budget);
                        if (!tau0 || !tau1) {
                            ++rep.budget_exhausted;
                        } else if (*tau1 < *tau0) {
                            ++rep.supporting;
                        } else {
                            rep.candidates.push_back({print_word(w), i, j, print_word(plus), t, t2, *tau0, *tau1});
                        }
                    }
                }
            }
        if (!tangled) rep.skipped = 1;
    } catch (const std::exception& e) {
        rep.errors.push_back(print_word(w) + ": " + e.what());
    }
    return rep;
}

ConjectureReport conjecture_experiment(int n, long count, std::uint64_t seed, long budget, int max_len) {
    if (n < 2) throw BraidError("conjecture_experiment: need n >= 2");
    ConjectureReport rep;
    rep.strands = n;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (long b = 0; b < count; ++b) {
        const std::uint64_t s = rng();
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(max_len, 1)));
        const auto one = conjecture_on(random_word(n, len, s), budget);
        rep.braids += one.braids;
        rep.skipped += one.skipped;
        rep.moves += one.moves;
        rep.supporting += one.supporting;
        rep.budget_exhausted += one.budget_exhausted;
        rep.candidates.insert(rep.candidates.end(), one.candidates.begin(), one.candidates.end());
        rep.errors.insert(rep.errors.end(), one.errors.begin(), one.errors.end());
    }
    return rep;
}

std::string report_to_json(const ConjectureReport& r) {
    ordered_json j;
    j["status"] = "EXPERIMENTAL: the statement is open, candidates are not counterexamples until checked";
    j["strands"] = r.strands;
    j["seed"] = r.seed;
    j["braids"] = r.braids;
    j["skipped"] = r.skipped;
    j["moves"] = r.moves;
    j["supporting"] = r.supporting;
    j["budget_exhausted"] = r.budget_exhausted;
    auto cs = ordered_json::array();
    for (const auto& c : r.candidates)
        cs.push_back({{"word", c.word},
                      {"disk", {c.first, c.last}},
                      {"beta_plus", c.beta_plus},
                      {"tangledness", {c.tangledness_before, c.tangledness_after}},
                      {"tau_length", {c.tau_before, c.tau_after}}});
    j["candidates"] = cs;
    j["errors"] = r.errors;
    return j.dump();
}

std::string render_svg(const CurveDiagram& d, const LabelTrace& trace) {
    constexpr int step = 30, unit = 14, margin = 40;
    const auto& ev = d.events();
    const auto& sides = d.sides();

    std::map<AxisPos, int> column;
    for (const auto& e : ev) column[axis_pos(e)] = 0;
    int c = 0;
    for (auto& [pos, col] : column) col = c++;
    auto x_of = [&](std::size_t k) { return margin + step * column.at(axis_pos(ev[k])); };

    // nesting depth per arc, within its half
    const std::size_t arcs = sides.size();
    std::vector<int> lo(arcs), hi(arcs), depth(arcs, 1);
    for (std::size_t a = 0; a < arcs; ++a) {
        lo[a] = std::min(x_of(a), x_of(a + 1));
        hi[a] = std::max(x_of(a), x_of(a + 1));
    }
    std::vector<std::size_t> order(arcs);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return hi[a] - lo[a] < hi[b] - lo[b]; });
    int max_depth = 1;
    for (std::size_t p = 0; p < arcs; ++p)
        for (std::size_t q = 0; q < p; ++q) {
            const auto a = order[p], b = order[q];
            if (sides[a] == sides[b] && lo[b] >= lo[a] && hi[b] <= hi[a] && hi[b] - lo[b] < hi[a] - lo[a])
                depth[a] = std::max(depth[a], depth[b] + 1);
            max_depth = std::max(max_depth, depth[a]);
        }

    const int width = 2 * margin + step * std::max(c - 1, 0);
    const int y0 = unit * max_depth + 30;
    const int height = 2 * y0;
    const std::size_t first = d.first_puncture_event();

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<line x1=\"" << margin / 2 << "\" y1=\"" << y0 << "\" x2=\"" << width - margin / 2 << "\" y2=\"" << y0
      << "\" stroke=\"#bbb\"/>\n";
    for (std::size_t k = 0; k < ev.size(); ++k)
        if (ev[k].kind == EventKind::Puncture)
            s << "<circle cx=\"" << x_of(k) << "\" cy=\"" << y0 << "\" r=\"3\" fill=\"black\"/>\n";
    for (std::size_t a = 0; a < arcs; ++a) {
        const int sign = sides[a] == Side::Upper ? -1 : 1;
        const int y = y0 + sign * unit * depth[a];
        s << "<path d=\"M " << x_of(a) << ' ' << y0 << " V " << y << " H " << x_of(a + 1) << " V " << y0
          << "\" fill=\"none\" stroke=\"black\"";
        if (a < first) s << " stroke-dasharray=\"4 3\"";
        s << "/>\n";
        std::vector<int> labels;
        for (const auto& seg : trace.segments)
            if (seg.start_param < static_cast<double>(a + 1) && seg.end_param > static_cast<double>(a))
                labels.push_back(seg.label);
        const int ty = sign < 0 ? y - 3 : y + 11;
        for (std::size_t m = 0; m < labels.size(); ++m) {
            const int tx = lo[a] + (hi[a] - lo[a]) * static_cast<int>(m + 1) / static_cast<int>(labels.size() + 1);
            s << "<text x=\"" << tx << "\" y=\"" << ty
              << "\" font-size=\"10\" text-anchor=\"middle\" class=\"label\">" << labels[m] << "</text>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_svg(const CurveDiagram& d) { return render_svg(d, label_trace(d)); }

}  // namespace windbraid
