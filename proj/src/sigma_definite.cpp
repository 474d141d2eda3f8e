#include "windbraid/sigma_definite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "json.hpp"
#include "windbraid/garside.hpp"
#include "windbraid/relaxation.hpp"
#include "windbraid/winding_labels.hpp"

namespace windbraid {

std::string sign_name(Sign s) {
    switch (s) {
        case Sign::Positive: return "positive";
        case Sign::Negative: return "negative";
        case Sign::Neutral: return "neutral";
    }
    return "neutral";
}

namespace {

// Arc j -> j+1 is a straight step Start -> p1 or p_k -> p_{k+1}.
bool is_horizontal_step(const CurveDiagram& d, std::size_t j) {
    const auto& ev = d.events();
    const Event& a = ev[j];
    const Event& b = ev[j + 1];
    if (b.kind != EventKind::Puncture) return false;
    const int from = a.kind == EventKind::Start ? 0 : (a.kind == EventKind::Puncture ? a.index : -1);
    if (from < 0 || b.index != from + 1) return false;
    return d.gap_order(from).empty();
}

int first_tangled_arc(const CurveDiagram& d) {
    const std::size_t m = d.events().size();
    for (std::size_t j = 0; j + 1 < m; ++j)
        if (!is_horizontal_step(d, j)) return static_cast<int>(j);
    return -1;
}

}  // namespace

Sign dehornoy_sign(const CurveDiagram& d) {
    const int j = first_tangled_arc(d);
    if (j < 0) return Sign::Neutral;
    return d.sides()[j] == Side::Upper ? Sign::Positive : Sign::Negative;
}

int dehornoy_level(const CurveDiagram& d) {
    const int j = first_tangled_arc(d);
    return j < 0 ? 0 : j + 1;
}

BraidWord handle_reduce(const BraidWord& w, long budget) {
    std::vector<int> s;
    for (const auto& l : w.letters()) s.push_back(l.sign * l.index);
    long rewrites = 0;
    for (;;) {
        // the handle closing first contains no complete handle, so it is
        // always permitted
        std::size_t p = 0, q = 0;
        bool found = false;
        for (q = 1; q < s.size() && !found; ++q) {
            const int i = std::abs(s[q]);
            for (std::size_t k = q; k-- > 0;) {
                const int j = std::abs(s[k]);
                if (j > i) continue;
                if (j == i && s[k] == -s[q]) {
                    p = k;
                    found = true;
                }
                break;
            }
            if (found) break;
        }
        if (!found) break;
        if (++rewrites > budget) throw BraidError("handle_reduce: rewrite budget exceeded");
        const int i = std::abs(s[p]);
        const int e = s[p] > 0 ? 1 : -1;
        std::vector<int> inner;
        for (std::size_t k = p + 1; k < q; ++k) {
            if (std::abs(s[k]) == i + 1) {
                const int dsign = s[k] > 0 ? 1 : -1;
                inner.push_back(-e * (i + 1));
                inner.push_back(dsign * i);
                inner.push_back(e * (i + 1));
            } else {
                inner.push_back(s[k]);
            }
        }
        std::vector<int> next(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(next.end(), inner.begin(), inner.end());
        next.insert(next.end(), s.begin() + static_cast<std::ptrdiff_t>(q) + 1, s.end());
        s = std::move(next);
    }
    BraidWord out(w.strands());
    for (int v : s) out.push_back({std::abs(v), v > 0 ? 1 : -1});
    return out;
}

Sign handle_reduction_sign(const BraidWord& w, long budget) {
    const auto r = handle_reduce(w, budget);
    int lowest = 0, sign = 0;
    for (const auto& l : r.letters())
        if (lowest == 0 || l.index < lowest) {
            lowest = l.index;
            sign = l.sign;
        }
    return static_cast<Sign>(sign);
}

ComplexityPair complexity_pair(const CurveDiagram& d) {
    const int x = extreme_labels(d).largest;
    if (x < 0) throw BraidError("complexity_pair: LL < 0, the braid is sigma-negative");
    if (d.strands() < 3) return {x, 0};
    // every end on the disk boundary may be labelled 0 or 1; take the
    // choice with the smallest span
    struct Option {
        int hi, lo;
    };
    std::vector<std::vector<Option>> options;
    for (const auto& c : subdisk_labels(d, 2, d.strands()).components) {
        std::vector<Option> opts;
        for (int delta : {-1, 0, 1}) {
            auto end_ok = [](int v) { return v == 0 || v == 1; };
            if (!end_ok(c.start_label + delta) || (c.two_ended && !end_ok(c.end_label + delta))) continue;
            opts.push_back({std::max(c.largest + delta, 0), std::max(-(c.smallest + delta), 0)});
        }
        options.push_back(std::move(opts));
    }
    int best = std::numeric_limits<int>::max();
    for (const auto& cap : options)
        for (const auto& o : cap) {
            // the largest label is at most o.hi; minimise the depth below 0
            int depth = 0;
            bool ok = true;
            for (const auto& opts : options) {
                int cheapest = std::numeric_limits<int>::max();
                for (const auto& p : opts)
                    if (p.hi <= o.hi) cheapest = std::min(cheapest, p.lo);
                if (cheapest == std::numeric_limits<int>::max()) ok = false;
                depth = std::max(depth, cheapest);
            }
            if (ok) best = std::min(best, o.hi + depth);
        }
    return {x, options.empty() ? 0 : best};
}

namespace {

struct CurvePoint {
    double param = 0;
    AxisPos pos2 = 0;
};

// Points of the curve between events `from` and `to`: events and vertical
// tangencies in curve order.
std::vector<CurvePoint> curve_points(const CurveDiagram& d, const LabelTrace& t, std::size_t from,
                                     std::size_t to) {
    const auto& ev = d.events();
    std::vector<CurvePoint> pts;
    for (std::size_t j = from; j <= to; ++j) pts.push_back({static_cast<double>(j), 2 * axis_pos(ev[j])});
    for (const auto& tg : t.tangencies)
        if (tg.param > static_cast<double>(from) && tg.param < static_cast<double>(to))
            pts.push_back({tg.param, 2 * axis_pos(ev[tg.anchor]) + (tg.rightmost ? 1 : -1)});
    std::sort(pts.begin(), pts.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.param < b.param; });
    return pts;
}

// Simple braid moving the punctures at positions `moved` (ascending) to the
// front in order, the others behind them in order; applied as its inverse.
BraidWord slide_word(int n, const std::vector<int>& moved) {
    std::vector<int> image(n, -1);
    int next = 0;
    for (int k : moved) image[k - 1] = next++;
    for (int k = 0; k < n; ++k)
        if (image[k] < 0) image[k] = next++;
    return word_from_simple(PermutationBraid(image).inverse_permutation()).inverse();
}

bool lowers_and_keeps_sign(const CurveDiagram& d, int x) {
    if (extreme_labels(d).largest >= x) return false;
    return !(dehornoy_level(d) == 1 && dehornoy_sign(d) == Sign::Negative);
}

// Nonempty subsets of 2..n, smallest first.
std::vector<std::vector<int>> slide_sets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < n - 1; ++b)
            if (mask >> b & 1u) s.push_back(b + 2);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

// Punctures inside the loop formed by the curve piece around the
// largest-label arc and the first gap, or nullopt when the piece does not
// come back to the first gap.
std::optional<std::vector<int>> enclosed_punctures(const CurveDiagram& d, const LabelTrace& t, int largest) {
    const auto& ev = d.events();
    const int n = d.strands();
    const LabelSegment* top = nullptr;
    for (const auto& s : t.segments)
        if (in_restricted(t, s) && s.label == largest) {
            top = &s;
            break;
        }
    auto in_gap0 = [&](std::size_t j) {
        return ev[j].kind == EventKind::Start || (ev[j].kind == EventKind::Crossing && ev[j].index == 0);
    };
    auto from = static_cast<std::size_t>(std::floor(top->start_param));
    while (!in_gap0(from)) --from;
    auto to = static_cast<std::size_t>(std::ceil(top->end_param));
    while (to < ev.size() && !in_gap0(to)) ++to;
    if (to >= ev.size()) return std::nullopt;

    // punctures on the piece count as enclosed; the others when an upward
    // ray meets the piece an odd number of times
    const auto pts = curve_points(d, t, from, to);
    std::vector<int> moved;
    for (int k = 1; k <= n; ++k) {
        const std::size_t e = d.puncture_event(k);
        if (e > from && e < to) {
            moved.push_back(k);
            continue;
        }
        const AxisPos x = 2 * axis_pos(ev[e]);
        int hits = 0;
        for (std::size_t q = 0; q + 1 < pts.size(); ++q) {
            const auto arc = static_cast<std::size_t>(std::floor(pts[q].param));
            if (d.sides()[arc] != Side::Upper) continue;
            const AxisPos a = std::min(pts[q].pos2, pts[q + 1].pos2), b = std::max(pts[q].pos2, pts[q + 1].pos2);
            if (a < x && x < b) ++hits;
        }
        if (hits % 2 == 1) moved.push_back(k);
    }
    if (moved.empty() || moved.front() == 1) return std::nullopt;
    return moved;
}

std::optional<SlideResult> try_slide(const CurveDiagram& d) {
    const int n = d.strands();
    const auto t = label_trace(d);
    const int x = extreme_labels(t).largest;
    if (auto s = enclosed_punctures(d, t, x)) {
        SlideResult r{slide_word(n, *s), apply_word(d, slide_word(n, *s)), *s, true};
        if (lowers_and_keeps_sign(r.diagram, x)) return r;
    }
    for (const auto& s : slide_sets(n)) {
        const auto w = slide_word(n, s);
        auto image = apply_word(d, w);
        if (lowers_and_keeps_sign(image, x)) return SlideResult{w, std::move(image), s, false};
    }
    return std::nullopt;
}

// Simples and inverse simples on strands 2..n, shortest first.
std::vector<BraidWord> neutral_moves(int n) {
    std::vector<BraidWord> out;
    std::vector<int> p(n - 1);
    for (int i = 0; i < n - 1; ++i) p[i] = i + 1;
    do {
        std::vector<int> image(n, 0);
        for (int i = 0; i < n - 1; ++i) image[i + 1] = p[i];
        const PermutationBraid s(image);
        if (s.is_identity()) continue;
        out.push_back(word_from_simple(s));
        out.push_back(word_from_simple(s).inverse());
    } while (std::next_permutation(p.begin(), p.end()));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

// Braid without sigma_1 whose diagram is `d`; the first arc of `d` must be
// the horizontal step to puncture 1.
BraidWord sigma1_free_word(const CurveDiagram& d) {
    const int n = d.strands();
    if (d.is_trivial()) return BraidWord(n);
    std::vector<Event> ev(d.events().begin() + 1, d.events().end());
    std::vector<Side> sides(d.sides().begin() + 1, d.sides().end());
    ev.front() = Event{EventKind::Start, 0, 0, Direction::Right};
    for (std::size_t j = 1; j < ev.size(); ++j) {
        if (ev[j].kind == EventKind::Crossing && ev[j].index == 0)
            throw BraidError("sigma1_free_word: curve returns to the first gap");
        ev[j].index -= 1;
    }
    const auto sub = reduce(CurveDiagram(n - 1, std::move(ev), std::move(sides)));
    return shift_indices(braid_from_diagram(sub), 1, n);
}

int count_index(const BraidWord& w, int index) {
    return static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(),
                                          [&](const Letter& l) { return l.index == index; }));
}

}  // namespace

SlideResult slide_move(const CurveDiagram& d) {
    const int n = d.strands();
    if (dehornoy_level(d) != 1 || dehornoy_sign(d) != Sign::Positive)
        throw BraidError("slide_move: diagram is not sigma_1-positive");
    if (extreme_labels(d).largest <= 0) throw BraidError("slide_move: need LL > 0");
    if (n >= 3 && !is_completely_untangled(d, 2, n)) throw BraidError("slide_move: disk 2..n is tangled");
    auto r = try_slide(d);
    if (!r) throw BraidError("slide_move: no slide lowers the largest label");
    return *r;
}

SigmaDefiniteReport sigma1_definite_report(const BraidWord& w) {
    const int n = w.strands();
    SigmaDefiniteReport rep;
    rep.input = w;
    const auto is = inf_sup(w);
    rep.sup = is.sup;
    rep.length_in = is.garside_length;
    const auto d = diagram_of(w);

    if (n == 2 || dehornoy_level(d) != 1) {
        rep.output = n == 2 ? free_reduce(w) : sigma1_free_word(d);
    } else if (dehornoy_sign(d) == Sign::Negative) {
        auto r = sigma1_definite_report(mirror(w));
        rep.output = mirror(r.output);
        rep.slides = r.slides;
        rep.assisted = r.assisted;
    } else {
        // act by sigma_1-neutral and sigma_1-negative braids until the
        // diagram leaves level 1; w is the inverse of that motion times the tail
        const int x0 = extreme_labels(d).largest;
        const auto moves = neutral_moves(n);
        BraidWord motion(n);
        CurveDiagram cur = d;
        while (dehornoy_level(cur) == 1) {
            if (rep.slides > x0) throw BraidError("sigma1_definite_word: too many slides");
            auto u = untangle_subdisk(cur, 2, n);
            motion.append(u.word);
            cur = std::move(u.diagram);
            std::optional<SlideResult> slide = try_slide(cur);
            const int x = extreme_labels(cur).largest;
            auto usable = [&](const CurveDiagram& base) {
                return dehornoy_level(base) == 1 && extreme_labels(base).largest <= x;
            };
            BraidWord prefix(n);
            for (std::size_t a = 0; !slide && a < moves.size(); ++a) {
                const auto base = apply_word(cur, moves[a]);
                if (!usable(base)) continue;
                if ((slide = try_slide(base))) prefix = moves[a];
            }
            for (std::size_t a = 0; !slide && a < moves.size(); ++a)
                for (std::size_t b = 0; !slide && b < moves.size(); ++b) {
                    auto two = moves[a];
                    two.append(moves[b]);
                    const auto base = apply_word(cur, two);
                    if (!usable(base)) continue;
                    if ((slide = try_slide(base))) prefix = two;
                }
            if (!slide) throw BraidError("sigma1_definite_word: no slide found");
            if (!prefix.empty()) ++rep.assisted;
            motion.append(prefix);
            motion.append(slide->word);
            cur = std::move(slide->diagram);
            ++rep.slides;
        }
        rep.output = sigma1_free_word(cur);
        rep.output.append(motion.inverse());
    }
    rep.sigma1_count = count_index(rep.output, 1);
    rep.length_out = static_cast<int>(rep.output.size());
    rep.c_effective = rep.length_in == 0 ? 0.0
                                          : static_cast<double>(rep.length_out) / (rep.length_in * rep.length_in);
    return rep;
}

BraidWord sigma1_definite_word(const BraidWord& w) { return sigma1_definite_report(w).output; }

BraidWord sigma_definite_word(const BraidWord& w) {
    const int n = w.strands();
    auto r = sigma1_definite_word(w);
    if (n == 2 || count_index(r, 1) > 0) return r;
    return shift_indices(sigma_definite_word(shift_indices(r, -1, n - 1)), 1, n);
}

bool is_sigma_definite(const BraidWord& w) {
    int lowest = 0, sign = 0;
    for (const auto& l : w.letters()) {
        if (lowest == 0 || l.index < lowest) {
            lowest = l.index;
            sign = l.sign;
        } else if (l.index == lowest && l.sign != sign) {
            sign = 0;
        }
    }
    return lowest == 0 || sign != 0;
}

std::string report_to_json(const SigmaDefiniteReport& r) {
    nlohmann::ordered_json j;
    j["input"] = print_word(r.input);
    j["output_word"] = print_word(r.output);
    j["sigma1_count"] = r.sigma1_count;
    j["sup"] = r.sup;
    j["length_in"] = r.length_in;
    j["length_out"] = r.length_out;
    j["slides"] = r.slides;
    j["assisted_slides"] = r.assisted;
    j["C_effective"] = r.c_effective;
    return j.dump();
}

}  // namespace windbraid
