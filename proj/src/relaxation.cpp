#include "windbraid/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "windbraid/winding_labels.hpp"

namespace windbraid {

namespace {

// A point of the curve that bounds a piece of a label segment.
struct CurvePoint {
    double param = 0;
    AxisPos pos2 = 0;  // twice the axis position, +-1 beside the anchor for tangencies
};

struct Window {
    double from = 0;
    double to = 0;
};

// Accumulates "p below q" pairs from the segments of `t` seen through the
// given windows of the curve.
void collect_relation(const CurveDiagram& d, const LabelTrace& t, const std::vector<Window>& windows, int first,
                      int last, std::set<std::pair<int, int>>& rel) {
    const auto& ev = d.events();
    const auto& sides = d.sides();
    const std::size_t m = ev.size();
    std::vector<AxisPos> punct_pos2(d.strands() + 1, 0);
    for (int k = 1; k <= d.strands(); ++k) punct_pos2[k] = 2 * axis_pos(ev[d.puncture_event(k)]);

    auto point_at = [&](double param) {
        const auto j = static_cast<std::size_t>(std::floor(param));
        return CurvePoint{param, 2 * axis_pos(ev[std::min(j, m - 1)])};
    };

    for (std::size_t si = 0; si < t.segments.size(); ++si) {
        const auto& s = t.segments[si];
        // local maximum (+1) or minimum (-1) of the labels, 0 otherwise
        int prev = si > 0 ? t.segments[si - 1].label - s.label : 0;
        int next = si + 1 < t.segments.size() ? t.segments[si + 1].label - s.label : 0;
        if (prev == 0) prev = next;
        if (next == 0) next = prev;
        const int peak = prev < 0 && next < 0 ? 1 : (prev > 0 && next > 0 ? -1 : 0);
        for (const auto& w : windows) {
            const double lo = std::max(s.start_param, w.from), hi = std::min(s.end_param, w.to);
            if (lo > hi || (lo == hi && m > 1)) continue;
            std::vector<CurvePoint> pts;
            pts.push_back(point_at(lo));
            for (const auto& tg : t.tangencies)
                if (tg.param == lo) {
                    pts.back().pos2 = 2 * axis_pos(ev[tg.anchor]) + (tg.rightmost ? 1 : -1);
                    break;
                }
            std::set<int> on;
            for (std::size_t j = 0; j < m; ++j) {
                const auto p = static_cast<double>(j);
                if (p < lo || p > hi) continue;
                if (ev[j].kind == EventKind::Puncture && ev[j].index >= first && ev[j].index <= last)
                    on.insert(ev[j].index);
            }
            // interior points in curve order
            std::vector<CurvePoint> inner;
            for (std::size_t j = 0; j < m; ++j) {
                const auto p = static_cast<double>(j);
                if (p > lo && p < hi) inner.push_back({p, 2 * axis_pos(ev[j])});
            }
            CurvePoint end = point_at(hi);
            for (const auto& tg : t.tangencies) {
                const AxisPos x = 2 * axis_pos(ev[tg.anchor]) + (tg.rightmost ? 1 : -1);
                if (tg.param > lo && tg.param < hi) inner.push_back({tg.param, x});
                if (tg.param == hi) end.pos2 = x;
            }
            std::sort(inner.begin(), inner.end(),
                      [](const CurvePoint& a, const CurvePoint& b) { return a.param < b.param; });
            pts.insert(pts.end(), inner.begin(), inner.end());
            pts.push_back(end);

            std::set<int> below = on, above = on;
            for (std::size_t q = 0; q + 1 < pts.size(); ++q) {
                const auto arc = static_cast<std::size_t>(std::floor(pts[q].param));
                if (arc + 1 >= m) continue;
                const AxisPos a = std::min(pts[q].pos2, pts[q + 1].pos2), b = std::max(pts[q].pos2, pts[q + 1].pos2);
                for (int k = first; k <= last; ++k) {
                    if (punct_pos2[k] <= a || punct_pos2[k] >= b) continue;
                    (sides[arc] == Side::Upper ? below : above).insert(k);
                }
            }
            for (int p : below)
                for (int q : above)
                    if (p != q && !(on.count(p) && on.count(q))) rel.insert({p, q});
            // punctures on one segment: it must climb towards the right at a
            // maximum and towards the left at a minimum
            for (int p : on)
                for (int q : on)
                    if (p < q && peak != 0) rel.insert(peak > 0 ? std::pair{p, q} : std::pair{q, p});
        }
    }
}

BelowOrder close_and_sort(int n, int first, int last, const std::set<std::pair<int, int>>& rel) {
    const int k = last - first + 1;
    std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
    for (auto [p, q] : rel) reach[p - first][q - first] = 1;
    for (int m = 0; m < k; ++m)
        for (int a = 0; a < k; ++a)
            if (reach[a][m])
                for (int b = 0; b < k; ++b)
                    if (reach[m][b]) reach[a][b] = 1;
    BelowOrder out;
    out.n = n;
    out.first = first;
    out.last = last;
    for (int a = 0; a < k; ++a) {
        if (reach[a][a]) throw BraidError("below_order: relation has a cycle");
        for (int b = 0; b < k; ++b)
            if (reach[a][b]) out.relation.push_back({a + first, b + first});
    }
    // Stable topological sort from the top, leftmost first among the
    // available punctures: the rotation turns top-to-bottom into
    // left-to-right, so unrelated punctures keep their order.
    std::vector<char> placed(k, 0);
    out.rank.assign(k, 0);
    for (int r = k; r >= 1; --r) {
        for (int a = 0; a < k; ++a) {
            if (placed[a]) continue;
            bool ready = true;
            for (int b = 0; b < k && ready; ++b)
                if (!placed[b] && reach[a][b]) ready = false;
            if (!ready) continue;
            placed[a] = 1;
            out.rank[a] = r;
            break;
        }
    }
    out.bottom_to_top.assign(k, 0);
    for (int a = 0; a < k; ++a) out.bottom_to_top[out.rank[a] - 1] = a + first;
    return out;
}

// Puncture at position k goes to position last+first-rank: the highest one
// ends up leftmost.
PermutationBraid dance_move(const BelowOrder& order) {
    std::vector<int> image(order.n);
    for (int k = 0; k < order.n; ++k) image[k] = k;
    const int k = order.last - order.first + 1;
    for (int a = 0; a < k; ++a) image[order.first - 1 + a] = order.first - 1 + (k - order.rank[a]);
    return PermutationBraid(image).inverse_permutation();
}

BraidWord inverse_simple_word(const PermutationBraid& s) { return word_from_simple(s).inverse(); }

}  // namespace

BelowOrder below_order(const CurveDiagram& d) {
    const auto t = label_trace(d);
    std::set<std::pair<int, int>> rel;
    const double from = static_cast<double>(t.first_puncture);
    collect_relation(d, t, {{from, static_cast<double>(d.events().size() - 1)}}, 1, d.strands(), rel);
    return close_and_sort(d.strands(), 1, d.strands(), rel);
}

BelowOrder below_order(const CurveDiagram& d, int first, int last) {
    if (first == 1 && last == d.strands()) return below_order(d);
    const auto sub = subdisk_labels(d, first, last);
    const auto t = label_trace(d);
    std::vector<Window> windows;
    for (const auto& c : sub.components) windows.push_back({c.start_param, c.end_param});
    std::set<std::pair<int, int>> rel;
    collect_relation(d, t, windows, first, last, rel);
    return close_and_sort(d.strands(), first, last, rel);
}

std::pair<RelaxationStep, CurveDiagram> relax_step_down(const CurveDiagram& d) {
    const auto ext = extreme_labels(d);
    if (ext.largest <= 0 || ext.smallest < 0) throw BraidError("relax_step_down: need LL > 0 and SL >= 0");
    RelaxationStep step;
    step.kind = RelaxationStep::Kind::Down;
    step.move = dance_move(below_order(d));
    step.applied_word = inverse_simple_word(step.move);
    return {step, apply_word(d, step.applied_word)};
}

std::pair<RelaxationStep, CurveDiagram> relax_step_up(const CurveDiagram& d) {
    const auto ext = extreme_labels(d);
    if (ext.smallest >= 0 || ext.largest > 0) throw BraidError("relax_step_up: need SL < 0 and LL <= 0");
    auto [step, image] = relax_step_down(mirror_diagram(d));
    step.kind = RelaxationStep::Kind::Up;
    step.applied_word = mirror(step.applied_word);
    return {step, mirror_diagram(image)};
}

BraidWord word_from_factors(int strands, const std::vector<GarsideFactor>& factors) {
    BraidWord w(strands);
    for (const auto& f : factors) {
        const auto s = word_from_simple(f.simple);
        w.append(f.sign > 0 ? s : s.inverse());
    }
    return w;
}

std::vector<GarsideFactor> geodesic_factorization(const BraidWord& w) {
    const int n = w.strands();
    const auto is = inf_sup(w);
    const int shift = std::max(0, -is.inf);
    BraidWord shifted = w;
    shifted.append(delta_power_word(n, shift));

    // shifted * (s_K)^-1 ... (s_1)^-1 = 1, so shifted = s_1 ... s_K
    std::vector<PermutationBraid> simples;
    CurveDiagram cur = diagram_of(shifted);
    const int budget = std::max(is.sup, 0) + shift + 2;
    while (!cur.is_trivial()) {
        if (static_cast<int>(simples.size()) > budget) throw BraidError("geodesic_factorization: no termination");
        auto [step, next] = relax_step_down(cur);
        simples.push_back(step.move);
        cur = std::move(next);
    }
    std::reverse(simples.begin(), simples.end());

    // s_1 ... s_K Delta^-shift: pull one Delta^-1 to the right of each of the
    // last factors, which conjugates the r-th of them by tau^r
    std::vector<GarsideFactor> out;
    const int k = static_cast<int>(simples.size());
    const int merged = std::min(k, shift);
    for (int i = 0; i < k - merged; ++i) out.push_back({simples[i], 1});
    for (int r = 0; r < merged; ++r) {
        PermutationBraid s = simples[k - merged + r];
        if (r % 2 == 1) s = tau(s);
        out.push_back({tau(right_complement(s)), -1});
    }
    for (int i = merged; i < shift; ++i) out.push_back({PermutationBraid::delta(n), -1});
    return out;
}

BraidWord braid_from_diagram(const CurveDiagram& d) {
    const int n = d.strands();
    auto ext = extreme_labels(d);
    BraidWord motion(n);
    CurveDiagram cur = d;
    if (ext.smallest < 0 && ext.largest > 0) {
        motion = delta_power_word(n, -ext.smallest);
        cur = apply_word(cur, motion);
        ext = extreme_labels(cur);
    }
    const int budget = std::max(ext.largest, 0) - std::min(ext.smallest, 0) + 2;
    for (int steps = 0; !cur.is_trivial(); ++steps) {
        if (steps > budget) throw BraidError("braid_from_diagram: relaxation did not terminate");
        auto [step, next] = ext.largest > 0 ? relax_step_down(cur) : relax_step_up(cur);
        motion.append(step.applied_word);
        cur = std::move(next);
        ext = extreme_labels(cur);
    }
    return motion.inverse();
}

UntangleResult untangle_subdisk(const CurveDiagram& d, int i, int j) {
    const auto start = subdisk_labels(d, i, j);
    const int budget = std::max(start.largest, 0) - std::min(start.smallest, 0) + 1;
    UntangleResult out{BraidWord(d.strands()), d, 0};
    while (!is_completely_untangled(out.diagram, i, j)) {
        if (out.steps >= budget) throw BraidError("untangle_subdisk: step budget exceeded");
        const auto sub = subdisk_labels(out.diagram, i, j);
        BraidWord step(d.strands());
        if (sub.smallest >= 0) {
            step = inverse_simple_word(dance_move(below_order(out.diagram, i, j)));
        } else {
            step = mirror(inverse_simple_word(dance_move(below_order(mirror_diagram(out.diagram), i, j))));
        }
        out.word.append(step);
        out.diagram = apply_word(out.diagram, step);
        ++out.steps;
    }
    return out;
}

bool is_completely_untangled(const CurveDiagram& d, int i, int j) {
    for (const auto& c : subdisk_labels(d, i, j).components)
        if (c.rightmost_reversals > 1 || c.leftmost_reversals > 0) return false;
    return true;
}

std::string factors_to_json(const std::vector<GarsideFactor>& factors) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : factors) {
        nlohmann::ordered_json j;
        j["sign"] = f.sign;
        j["image"] = f.simple.image();
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

}  // namespace windbraid
