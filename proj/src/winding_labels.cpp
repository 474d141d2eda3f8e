#include "windbraid/winding_labels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "windbraid/turning.hpp"

namespace windbraid {

namespace {

bool is_odd(int v) { return v % 2 != 0; }

// Half-unit value mod 4 is 1 or 3 at a tangency; which one, together with the
// direction of travel, tells a rightmost point from a leftmost one.
bool tangency_is_rightmost(int value, int direction) {
    const int r = ((value % 4) + 4) % 4;
    return (r == 1) == (direction > 0);
}

int slot_beyond(const Event& e, bool rightmost) {
    if (e.kind == EventKind::Puncture) return 2 * e.index;
    if (e.kind == EventKind::Crossing) return 2 * e.index + 1;
    (void)rightmost;
    return 0;
}

int gap_beyond(const Event& e, bool rightmost) {
    switch (e.kind) {
        case EventKind::Start: return 0;
        case EventKind::Crossing: return e.index;
        case EventKind::Puncture: return rightmost ? e.index : e.index - 1;
    }
    return 0;
}

}  // namespace

LabelTrace label_trace(const CurveDiagram& d) {
    if (!is_reduced(d)) throw BraidError("label_trace: diagram is not reduced");
    const auto& ev = d.events();
    const auto& sides = d.sides();
    const std::size_t m = ev.size();
    LabelTrace out;
    out.first_puncture = d.first_puncture_event();
    out.tilde.assign(m, 0);

    std::vector<int> turn(m > 0 ? m - 1 : 0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        turn[j] = arc_turn(sides[j], ev[j].dir, axis_pos(ev[j]), ev[j + 1].dir, axis_pos(ev[j + 1]));
        out.tilde[j + 1] = out.tilde[j] + turn[j];
    }

    for (std::size_t j = 0; j + 1 < m; ++j) {
        const int a = out.tilde[j], b = out.tilde[j + 1];
        const int dir = b > a ? 1 : -1;
        std::vector<int> values;
        for (int v = a + dir; a != b && v != b; v += dir)
            if (is_odd(v)) values.push_back(v);
        const AxisPos pa = axis_pos(ev[j]), pb = axis_pos(ev[j + 1]);
        std::size_t last_anchor = j;
        for (std::size_t k = 0; k < values.size(); ++k) {
            Tangency t;
            t.param = static_cast<double>(j) + static_cast<double>(k + 1) / static_cast<double>(values.size() + 1);
            t.value = values[k];
            t.direction = dir;
            t.rightmost = tangency_is_rightmost(t.value, dir);
            t.anchor = t.rightmost == (pa > pb) ? j : j + 1;
            if (t.anchor < last_anchor) throw std::logic_error("label_trace: tangencies out of order");
            last_anchor = t.anchor;
            t.gap = gap_beyond(ev[t.anchor], t.rightmost);
            t.slot = slot_beyond(ev[t.anchor], t.rightmost);
            out.tangencies.push_back(t);
        }
        // passing straight through a crossing is a tangency; touching is not
        if (j + 2 < m && ev[j + 1].kind == EventKind::Crossing && (turn[j] > 0) == (turn[j + 1] > 0)) {
            Tangency t;
            t.param = static_cast<double>(j + 1);
            t.anchor = j + 1;
            t.value = b;
            t.direction = dir;
            t.rightmost = tangency_is_rightmost(b, dir);
            t.gap = ev[j + 1].index;
            t.slot = 2 * t.gap + 1;
            out.tangencies.push_back(t);
        }
    }

    auto terminal_gap = [&](std::size_t e, bool rightmost) { return gap_beyond(ev[e], rightmost); };
    auto terminal_slot = [&](std::size_t e, bool rightmost) { return slot_beyond(ev[e], rightmost); };

    LabelSegment cur;
    cur.label = 0;
    cur.from = 0;
    cur.start_param = 0;
    cur.left_terminal = true;
    cur.left_gap = 0;
    bool have_left = true, have_right = false;
    for (const auto& t : out.tangencies) {
        cur.end_param = t.param;
        cur.to = static_cast<std::size_t>(std::ceil(t.param));
        if (t.rightmost) {
            cur.right_gap = t.gap;
            cur.right_slot = t.slot;
            have_right = true;
        } else {
            cur.left_gap = t.gap;
            cur.left_slot = t.slot;
            have_left = true;
        }
        // the missing side is the curve's start
        if (!have_right) {
            cur.right_terminal = true;
            cur.right_gap = terminal_gap(cur.from, true);
            cur.right_slot = terminal_slot(cur.from, true);
        }
        if (!have_left) {
            cur.left_terminal = true;
            cur.left_gap = terminal_gap(cur.from, false);
            cur.left_slot = terminal_slot(cur.from, false);
        }
        out.segments.push_back(cur);
        LabelSegment next;
        next.label = cur.label + t.direction;
        next.from = static_cast<std::size_t>(std::floor(t.param));
        next.start_param = t.param;
        if (t.rightmost) {
            next.right_gap = t.gap;
            next.right_slot = t.slot;
            have_right = true;
            have_left = false;
        } else {
            next.left_gap = t.gap;
            next.left_slot = t.slot;
            have_left = true;
            have_right = false;
        }
        cur = next;
    }
    cur.end_param = static_cast<double>(m - 1);
    cur.to = m - 1;
    {
        // the last segment ends at the final puncture, heading as it passes
        const bool heading_right = ev[m - 1].dir == Direction::Right;
        if (!have_right) {
            cur.right_terminal = true;
            cur.right_gap = terminal_gap(heading_right ? m - 1 : cur.from, true);
            cur.right_slot = terminal_slot(heading_right ? m - 1 : cur.from, true);
        }
        if (!have_left) {
            cur.left_terminal = true;
            cur.left_gap = terminal_gap(heading_right ? cur.from : m - 1, false);
            cur.left_slot = terminal_slot(heading_right ? cur.from : m - 1, false);
        }
    }
    out.segments.push_back(cur);
    return out;
}

bool in_restricted(const LabelTrace& t, const LabelSegment& s) {
    return s.end_param > static_cast<double>(t.first_puncture) ||
           (s.end_param == static_cast<double>(t.first_puncture) && &s == &t.segments.back());
}

ExtremeLabels extreme_labels(const LabelTrace& t, Scope scope) {
    ExtremeLabels out{std::numeric_limits<int>::min(), std::numeric_limits<int>::max()};
    for (const auto& s : t.segments) {
        if (scope == Scope::Restricted && !in_restricted(t, s)) continue;
        out.largest = std::max(out.largest, s.label);
        out.smallest = std::min(out.smallest, s.label);
    }
    return out;
}

ExtremeLabels extreme_labels(const CurveDiagram& d, Scope scope) {
    return extreme_labels(label_trace(d), scope);
}

ExtremalArcStats extremal_arc_stats(const CurveDiagram& d) {
    const auto t = label_trace(d);
    const auto ext = extreme_labels(t, Scope::Restricted);
    ExtremalArcStats out;
    for (const auto& s : t.segments) {
        if (!in_restricted(t, s)) continue;
        if (s.label == ext.largest) {
            ++out.count_largest;
            out.right_gaps_largest.push_back(s.right_gap);
            out.left_gaps_largest.push_back(s.left_gap);
            // segments cut by either end of the restricted curve have no
            // well-defined extremity there
            if (s.start_param > static_cast<double>(t.first_puncture) && &s != &t.segments.back()) {
                out.proper_right_slots_largest.push_back(s.right_slot);
                out.proper_left_slots_largest.push_back(s.left_slot);
            }
        }
        if (s.label == ext.smallest) {
            ++out.count_smallest;
            out.right_gaps_smallest.push_back(s.right_gap);
            out.left_gaps_smallest.push_back(s.left_gap);
        }
    }
    return out;
}

namespace {

// Which events lie in the round disk on punctures i..j. The disk boundary
// crosses gaps i-1 and j; how many of their crossings it encloses is chosen
// to put the boundary in minimal position with the curve, enclosing as many
// crossings as possible among the minimal choices.
std::vector<char> disk_membership(const CurveDiagram& d, int i, int j) {
    const auto& ev = d.events();
    const std::size_t m = ev.size();
    std::vector<char> in(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
        const Event& e = ev[k];
        if (e.kind == EventKind::Puncture) in[k] = e.index >= i && e.index <= j;
        if (e.kind == EventKind::Crossing) in[k] = e.index >= i && e.index <= j - 1;
    }
    auto left = d.gap_order(i - 1);  // the rightmost of these may be inside
    std::reverse(left.begin(), left.end());
    const auto right = d.gap_order(j);  // the leftmost of these may be inside
    auto cut = [&](std::size_t k) {
        int c = 0;
        if (k > 0 && in[k - 1] != in[k]) ++c;
        if (k + 1 < m && in[k + 1] != in[k]) ++c;
        return c;
    };
    int base = 0;
    for (std::size_t k = 0; k + 1 < m; ++k) base += in[k] != in[k + 1];
    int best = std::numeric_limits<int>::max();
    std::size_t best_s = 0, best_r = 0;
    for (std::size_t s = 0; s <= left.size(); ++s) {
        if (s > 0) {
            const std::size_t k = left[s - 1];
            const int before = cut(k);
            in[k] = 1;
            base += cut(k) - before;
        }
        int cost = base;
        for (std::size_t r = 0; r <= right.size(); ++r) {
            if (r > 0) {
                const std::size_t k = right[r - 1];
                const int before = cut(k);
                in[k] = 1;
                cost += cut(k) - before;
            }
            if (cost < best || (cost == best && s + r >= best_s + best_r)) {
                best = cost;
                best_s = s;
                best_r = r;
            }
        }
        for (std::size_t r = right.size(); r > 0; --r) in[right[r - 1]] = 0;
    }
    for (std::size_t s = 0; s < left.size(); ++s) in[left[s]] = s < best_s;
    for (std::size_t r = 0; r < right.size(); ++r) in[right[r]] = r < best_r;
    return in;
}

// where the curve crosses the disk boundary inside the arc after event a:
// past the tangencies attached to a, before those attached to a+1
double boundary_param(const LabelTrace& t, std::size_t a) {
    int count = 0, near_a = 0;
    for (const auto& tg : t.tangencies) {
        if (tg.param <= static_cast<double>(a) || tg.param >= static_cast<double>(a + 1)) continue;
        ++count;
        if (tg.anchor == a) ++near_a;
    }
    return static_cast<double>(a) + (near_a + 0.5) / static_cast<double>(count + 1);
}

DiskComponent read_component(const LabelTrace& t, const std::vector<Event>& ev, std::size_t first,
                             std::size_t last) {
    const std::size_t m = ev.size();
    DiskComponent c;
    c.first_event = first;
    c.last_event = last;
    c.two_ended = last + 1 < m;
    c.start_param = boundary_param(t, first - 1);
    c.end_param = c.two_ended ? boundary_param(t, last) : static_cast<double>(m - 1);

    std::vector<const LabelSegment*> met;
    for (const auto& s : t.segments)
        if (s.end_param > c.start_param && s.start_param < c.end_param) met.push_back(&s);
    const int a = met.front()->label, b = met.back()->label;
    c.shift = c.two_ended ? -std::min(a, b) : -a;
    c.start_label = a + c.shift;
    c.end_label = b + c.shift;

    // a piece running into the curve's end is read from its first puncture on
    double from_param = c.start_param;
    if (!c.two_ended)
        for (std::size_t e = first; e <= last; ++e)
            if (ev[e].kind == EventKind::Puncture) {
                from_param = static_cast<double>(e);
                break;
            }
    c.largest = std::numeric_limits<int>::min();
    c.smallest = std::numeric_limits<int>::max();
    for (const auto* s : met) {
        c.labels.push_back(s->label + c.shift);
        if (s->end_param > from_param || s == met.back()) {
            c.largest = std::max(c.largest, s->label + c.shift);
            c.smallest = std::min(c.smallest, s->label + c.shift);
        }
    }
    for (const auto& tg : t.tangencies)
        if (tg.param > c.start_param && tg.param < c.end_param)
            ++(tg.rightmost ? c.rightmost_reversals : c.leftmost_reversals);
    return c;
}

}  // namespace

SubdiskLabels subdisk_labels(const CurveDiagram& d, int i, int j) {
    if (i < 1 || j > d.strands() || i >= j) throw BraidError("subdisk_labels: need 1 <= i < j <= n");
    const auto t = label_trace(d);
    const auto& ev = d.events();
    const std::size_t m = ev.size();
    const auto in = disk_membership(d, i, j);

    SubdiskLabels out;
    std::size_t k = 0;
    while (k < m) {
        if (!in[k]) {
            ++k;
            continue;
        }
        const std::size_t first = k;
        while (k + 1 < m && in[k + 1]) ++k;
        const std::size_t last = k;
        ++k;
        if (last + 1 < m) {
            out.components.push_back(read_component(t, ev, first, last));
            continue;
        }
        // the piece holding the curve's end is read like a restricted diagram
        // starting at its first puncture
        std::size_t junction = first;
        while (ev[junction].kind != EventKind::Puncture) ++junction;
        const auto redirected = redirect_passages(d, junction);
        out.components.push_back(read_component(label_trace(redirected), redirected.events(), first, last));
    }
    if (!out.components.empty()) {
        out.largest = std::numeric_limits<int>::min();
        out.smallest = std::numeric_limits<int>::max();
        for (const auto& c : out.components) {
            out.largest = std::max(out.largest, c.largest);
            out.smallest = std::min(out.smallest, c.smallest);
        }
    }
    return out;
}

int tangledness(const CurveDiagram& d, int i, int j) {
    int best = 0;
    for (const auto& c : subdisk_labels(d, i, j).components) {
        const auto [lo, hi] = std::minmax_element(c.labels.begin(), c.labels.end());
        const int ends = c.two_ended ? std::abs(c.end_label - c.start_label) : 0;
        best = std::max(best, *hi - ends - *lo);
    }
    return best;
}

std::string label_trace_to_json(const LabelTrace& t) {
    nlohmann::ordered_json j;
    auto tilde = nlohmann::ordered_json::array();
    for (int v : t.tilde) {
        if (v % 2 == 0)
            tilde.push_back(v / 2);
        else
            tilde.push_back(v / 2.0);
    }
    j["tilde"] = std::move(tilde);
    auto segs = nlohmann::ordered_json::array();
    for (const auto& s : t.segments) {
        nlohmann::ordered_json js;
        js["label"] = s.label;
        js["from"] = s.from;
        js["to"] = s.to;
        js["left_gap"] = s.left_gap;
        js["right_gap"] = s.right_gap;
        segs.push_back(std::move(js));
    }
    j["segments"] = std::move(segs);
    return j.dump();
}

}  // namespace windbraid
