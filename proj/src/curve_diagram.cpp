#include "windbraid/curve_diagram.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <random>
#include <tuple>

#include "json.hpp"
#include "windbraid/turning.hpp"

namespace windbraid {

AxisPos axis_pos(const Event& e) {
    switch (e.kind) {
        case EventKind::Start: return 0;
        case EventKind::Crossing: return (static_cast<AxisPos>(2 * e.index + 1) << 32) + e.rank;
        case EventKind::Puncture: return static_cast<AxisPos>(2 * e.index) << 32;
    }
    return 0;
}

CurveDiagram::CurveDiagram(int strands, std::vector<Event> events, std::vector<Side> sides)
    : n_(strands), events_(std::move(events)), sides_(std::move(sides)) {
    if (n_ < 1) throw BraidError("curve diagram needs at least one puncture");
    if (events_.empty() || sides_.size() + 1 != events_.size())
        throw BraidError("curve diagram: need exactly one side per consecutive event pair");
}

std::size_t CurveDiagram::crossing_count() const {
    return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [](const Event& e) {
        return e.kind == EventKind::Crossing;
    }));
}

std::vector<std::size_t> CurveDiagram::gap_order(int gap) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < events_.size(); ++j)
        if (events_[j].kind == EventKind::Crossing && events_[j].index == gap) out.push_back(j);
    std::sort(out.begin(), out.end(),
              [&](std::size_t a, std::size_t b) { return events_[a].rank < events_[b].rank; });
    return out;
}

std::size_t CurveDiagram::puncture_event(int k) const {
    for (std::size_t j = 0; j < events_.size(); ++j)
        if (events_[j].kind == EventKind::Puncture && events_[j].index == k) return j;
    throw BraidError("puncture " + std::to_string(k) + " missing from diagram");
}

std::size_t CurveDiagram::first_puncture_event() const {
    for (std::size_t j = 0; j < events_.size(); ++j)
        if (events_[j].kind == EventKind::Puncture) return j;
    throw BraidError("diagram has no puncture");
}

bool CurveDiagram::is_trivial() const { return *this == trivial_diagram(n_); }

CurveDiagram trivial_diagram(int strands) {
    if (strands < 1) throw BraidError("trivial_diagram: need at least one strand");
    std::vector<Event> events{{EventKind::Start, 0, 0, Direction::Right}};
    for (int k = 1; k <= strands; ++k) events.push_back({EventKind::Puncture, k, 0, Direction::Right});
    return CurveDiagram(strands, std::move(events),
                        std::vector<Side>(static_cast<std::size_t>(strands), Side::Upper));
}

// ---------------------------------------------------------------------------
// validation

std::vector<std::string> structural_violations(const CurveDiagram& d) {
    std::vector<std::string> out;
    const auto& ev = d.events();
    const auto& sides = d.sides();
    const int n = d.strands();
    if (ev.front().kind != EventKind::Start) out.push_back("endpoints: first event is not Start");
    if (ev.back().kind != EventKind::Puncture) out.push_back("endpoints: last event is not a Puncture");
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    std::map<int, std::vector<int>> ranks;
    for (std::size_t j = 0; j < ev.size(); ++j) {
        const auto& e = ev[j];
        if (e.kind == EventKind::Start && j != 0)
            out.push_back("endpoints: Start at event " + std::to_string(j));
        if (e.kind == EventKind::Puncture) {
            if (e.index < 1 || e.index > n)
                out.push_back("punctures: index out of range at event " + std::to_string(j));
            else
                ++seen[static_cast<std::size_t>(e.index)];
        }
        if (e.kind == EventKind::Crossing) {
            if (e.index < 0 || e.index > n) {
                out.push_back("gap orders: gap out of range at event " + std::to_string(j));
                continue;
            }
            ranks[e.index].push_back(e.rank);
            if (j == 0 || j + 1 == ev.size()) continue;
            const Side before = sides[j - 1], after = sides[j];
            const bool ok = (e.dir == Direction::Up && before == Side::Lower && after == Side::Upper) ||
                            (e.dir == Direction::Down && before == Side::Upper && after == Side::Lower);
            if (!ok) out.push_back("crossing/arc compatibility: event " + std::to_string(j));
        }
    }
    for (int k = 1; k <= n; ++k)
        if (seen[static_cast<std::size_t>(k)] != 1)
            out.push_back("punctures: puncture " + std::to_string(k) + " appears " +
                          std::to_string(seen[static_cast<std::size_t>(k)]) + " times");
    for (auto& [gap, rs] : ranks) {
        std::sort(rs.begin(), rs.end());
        for (std::size_t r = 0; r < rs.size(); ++r)
            if (rs[r] != static_cast<int>(r + 1)) {
                out.push_back("gap orders: ranks of gap " + std::to_string(gap) + " are not 1..k");
                break;
            }
    }
    if (!out.empty()) return out;
    for (Side half : {Side::Upper, Side::Lower}) {
        std::vector<std::tuple<AxisPos, AxisPos, std::size_t>> chords;
        for (std::size_t j = 0; j + 1 < ev.size(); ++j) {
            if (sides[j] != half) continue;
            const AxisPos a = axis_pos(ev[j]), b = axis_pos(ev[j + 1]);
            chords.emplace_back(std::min(a, b), std::max(a, b), j);
        }
        std::sort(chords.begin(), chords.end(), [](const auto& x, const auto& y) {
            if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
            return std::get<1>(x) > std::get<1>(y);
        });
        std::vector<std::pair<AxisPos, std::size_t>> open;
        for (const auto& [l, r, j] : chords) {
            while (!open.empty() && open.back().first <= l) open.pop_back();
            if (!open.empty() && r > open.back().first) {
                out.push_back(std::string("embeddedness: ") +
                              (half == Side::Upper ? "upper" : "lower") + " arcs " +
                              std::to_string(open.back().second) + " and " + std::to_string(j) +
                              " interleave");
                break;
            }
            open.emplace_back(r, j);
        }
    }
    return out;
}

std::vector<std::string> validate(const CurveDiagram& d) {
    auto out = structural_violations(d);
    if (!out.empty()) return out;
    const auto& ev = d.events();
    // adjacency on the axis, computed once
    std::vector<std::pair<AxisPos, std::size_t>> order;
    for (std::size_t j = 0; j < ev.size(); ++j) order.emplace_back(axis_pos(ev[j]), j);
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> axis_index(ev.size());
    for (std::size_t k = 0; k < order.size(); ++k) axis_index[order[k].second] = k;
    for (std::size_t j = 0; j + 1 < ev.size(); ++j) {
        const auto& a = ev[j];
        const auto& b = ev[j + 1];
        const bool adjacent = (axis_index[j] > axis_index[j + 1] ? axis_index[j] - axis_index[j + 1]
                                                                  : axis_index[j + 1] - axis_index[j]) == 1;
        if (!adjacent) continue;
        const bool ca = a.kind == EventKind::Crossing, cb = b.kind == EventKind::Crossing;
        if (ca && cb && a.index == b.index)
            out.push_back("reduced: empty bigon between events " + std::to_string(j) + " and " +
                          std::to_string(j + 1));
        else if (ca != cb)
            out.push_back("reduced: empty half-bigon between events " + std::to_string(j) + " and " +
                          std::to_string(j + 1));
    }
    return out;
}

bool is_reduced(const CurveDiagram& d) { return validate(d).empty(); }

// ---------------------------------------------------------------------------
// reduction

namespace {

constexpr int kNone = -1;

// Mutable linked form of a diagram used while deleting bigons.
class Reducer {
public:
    explicit Reducer(const CurveDiagram& d) : n_(d.strands()), ev_(d.events()) {
        const auto m = static_cast<int>(ev_.size());
        cprev_.assign(ev_.size(), kNone);
        cnext_.assign(ev_.size(), kNone);
        side_next_.assign(ev_.size(), Side::Upper);
        alive_.assign(ev_.size(), 1);
        gprev_.assign(ev_.size(), kNone);
        gnext_.assign(ev_.size(), kNone);
        gap_head_.assign(static_cast<std::size_t>(n_ + 1), kNone);
        gap_tail_.assign(static_cast<std::size_t>(n_ + 1), kNone);
        punct_.assign(static_cast<std::size_t>(n_ + 2), kNone);
        for (int j = 0; j < m; ++j) {
            if (j > 0) cprev_[u(j)] = j - 1;
            if (j + 1 < m) {
                cnext_[u(j)] = j + 1;
                side_next_[u(j)] = d.sides()[u(j)];
            }
            if (ev_[u(j)].kind == EventKind::Puncture) punct_[u(ev_[u(j)].index)] = j;
        }
        for (int g = 0; g <= n_; ++g) {
            int prev = kNone;
            for (std::size_t j : d.gap_order(g)) {
                const int x = static_cast<int>(j);
                gprev_[j] = prev;
                if (prev == kNone)
                    gap_head_[u(g)] = x;
                else
                    gnext_[u(prev)] = x;
                prev = x;
            }
            gap_tail_[u(g)] = prev;
        }
    }

    void run(std::mt19937_64* rng) {
        std::vector<int> work(ev_.size());
        for (std::size_t j = 0; j < ev_.size(); ++j) work[j] = static_cast<int>(j);
        if (rng) std::shuffle(work.begin(), work.end(), *rng);
        while (!work.empty()) {
            int x;
            if (rng) {
                std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
                const std::size_t k = pick(*rng);
                x = work[k];
                work[k] = work.back();
                work.pop_back();
            } else {
                x = work.back();
                work.pop_back();
            }
            if (!alive_[u(x)]) continue;
            if (cprev_[u(x)] != kNone && try_remove(cprev_[u(x)], x, work)) continue;
            if (cnext_[u(x)] != kNone) try_remove(x, cnext_[u(x)], work);
        }
    }

    CurveDiagram build() const {
        std::vector<int> new_rank(ev_.size(), 0);
        for (int g = 0; g <= n_; ++g) {
            int r = 0;
            for (int x = gap_head_[u(g)]; x != kNone; x = gnext_[u(x)]) new_rank[u(x)] = ++r;
        }
        std::vector<Event> events;
        std::vector<Side> sides;
        for (int x = 0; x != kNone; x = cnext_[u(x)]) {
            Event e = ev_[u(x)];
            if (e.kind == EventKind::Crossing) e.rank = new_rank[u(x)];
            events.push_back(e);
            if (cnext_[u(x)] != kNone) sides.push_back(side_next_[u(x)]);
        }
        return CurveDiagram(n_, std::move(events), std::move(sides));
    }

private:
    static std::size_t u(int x) { return static_cast<std::size_t>(x); }

    bool is_crossing(int x) const { return ev_[u(x)].kind == EventKind::Crossing; }

    int left_axis(int x) const {
        const Event& e = ev_[u(x)];
        switch (e.kind) {
            case EventKind::Start: return kNone;
            case EventKind::Crossing:
                if (gprev_[u(x)] != kNone) return gprev_[u(x)];
                return e.index == 0 ? 0 : punct_[u(e.index)];
            case EventKind::Puncture: {
                const int g = e.index - 1;
                if (gap_tail_[u(g)] != kNone) return gap_tail_[u(g)];
                return e.index == 1 ? 0 : punct_[u(e.index - 1)];
            }
        }
        return kNone;
    }

    int right_axis(int x) const {
        const Event& e = ev_[u(x)];
        switch (e.kind) {
            case EventKind::Start:
                return gap_head_[0] != kNone ? gap_head_[0] : punct_[1];
            case EventKind::Crossing:
                if (gnext_[u(x)] != kNone) return gnext_[u(x)];
                return e.index == n_ ? kNone : punct_[u(e.index + 1)];
            case EventKind::Puncture:
                if (gap_head_[u(e.index)] != kNone) return gap_head_[u(e.index)];
                return e.index == n_ ? kNone : punct_[u(e.index + 1)];
        }
        return kNone;
    }

    bool axis_adjacent(int a, int b) const { return right_axis(a) == b || left_axis(a) == b; }

    void unlink_from_gap(int c, std::vector<int>& work) {
        const int g = ev_[u(c)].index;
        const int l = gprev_[u(c)], r = gnext_[u(c)];
        const int left_neighbor = left_axis(c), right_neighbor = right_axis(c);
        if (l != kNone) gnext_[u(l)] = r; else gap_head_[u(g)] = r;
        if (r != kNone) gprev_[u(r)] = l; else gap_tail_[u(g)] = l;
        alive_[u(c)] = 0;
        if (left_neighbor != kNone) work.push_back(left_neighbor);
        if (right_neighbor != kNone) work.push_back(right_neighbor);
    }

    // a precedes b along the curve
    bool try_remove(int a, int b, std::vector<int>& work) {
        const bool ca = is_crossing(a), cb = is_crossing(b);
        if (ca && cb) {
            if (ev_[u(a)].index != ev_[u(b)].index) return false;
            if (gnext_[u(a)] != b && gnext_[u(b)] != a) return false;
            const int p = cprev_[u(a)], q = cnext_[u(b)];
            cnext_[u(p)] = q;
            cprev_[u(q)] = p;
            unlink_from_gap(a, work);
            unlink_from_gap(b, work);
            work.push_back(p);
            work.push_back(q);
            return true;
        }
        if (ca == cb) return false;
        if (ca) {
            // crossing a, then Start/puncture b
            if (!axis_adjacent(b, a)) return false;
            const int o = cprev_[u(a)];
            cnext_[u(o)] = b;
            cprev_[u(b)] = o;
            unlink_from_gap(a, work);
            work.push_back(o);
            work.push_back(b);
            return true;
        }
        if (!axis_adjacent(a, b)) return false;
        const int o = cnext_[u(b)];
        side_next_[u(a)] = side_next_[u(b)];
        cnext_[u(a)] = o;
        cprev_[u(o)] = a;
        unlink_from_gap(b, work);
        work.push_back(a);
        work.push_back(o);
        return true;
    }

    int n_;
    std::vector<Event> ev_;
    std::vector<int> cprev_, cnext_;
    std::vector<Side> side_next_;
    std::vector<char> alive_;
    std::vector<int> gprev_, gnext_, gap_head_, gap_tail_, punct_;
};

// Direction of travel through every puncture on a taut representative with
// the fewest vertical tangencies. Where both halves of the curve near a
// puncture lie on the same side, the direction is forced by the nesting of
// the two arcs; otherwise it is chosen by dynamic programming along the
// curve, preferring the direction the incoming arc already has.
void assign_directions(std::vector<Event>& ev, const std::vector<Side>& sides, std::size_t junction) {
    const std::size_t m = ev.size();
    std::vector<AxisPos> pos(m);
    for (std::size_t j = 0; j < m; ++j) pos[j] = axis_pos(ev[j]);

    std::vector<std::vector<Direction>> options(m);
    std::vector<Direction> preferred(m, Direction::Right);
    for (std::size_t j = 0; j < m; ++j) {
        const Event& e = ev[j];
        if (e.kind == EventKind::Start) {
            options[j] = {Direction::Right};
        } else if (e.kind == EventKind::Crossing) {
            const Direction d = sides[j - 1] == Side::Lower ? Direction::Up : Direction::Down;
            options[j] = {d};
        } else {
            const AxisPos a = pos[j - 1], p = pos[j];
            preferred[j] = a < p ? Direction::Right : Direction::Left;
            if (j + 1 < m && sides[j - 1] == sides[j]) {
                const AxisPos b = pos[j + 1];
                auto key = [p](AxisPos x) { return std::pair<int, AxisPos>(x > p ? 0 : 1, x); };
                options[j] = {key(a) > key(b) ? Direction::Right : Direction::Left};
            } else {
                options[j] = {preferred[j], preferred[j] == Direction::Right ? Direction::Left
                                                                              : Direction::Right};
            }
        }
    }
    // tangencies past the junction are what the labelling sees, so they are
    // minimized first; the rest only break ties
    auto parity = [&](std::size_t j) { return ev[j].kind == EventKind::Crossing ? 1 : 0; };
    auto arc_cost = [&](std::size_t j, Direction from, Direction to) {
        const int t = arc_turn(sides[j], from, pos[j], to, pos[j + 1]);
        const int count = odd_strictly_between(parity(j), parity(j) + t);
        return j >= junction ? count * 1024 + count : count;
    };
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    std::vector<std::array<int, 2>> best(m, {kInf, kInf});
    best[m - 1] = {0, 0};
    for (std::size_t j = m - 1; j-- > 0;) {
        for (std::size_t c = 0; c < options[j].size(); ++c) {
            int b = kInf;
            for (std::size_t c2 = 0; c2 < options[j + 1].size(); ++c2)
                b = std::min(b, arc_cost(j, options[j][c], options[j + 1][c2]) + best[j + 1][c2]);
            best[j][c] = b;
        }
    }
    Direction cur = options[0][0];
    ev[0].dir = cur;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        std::size_t pick = 0;
        int pick_cost = kInf;
        for (std::size_t c2 = 0; c2 < options[j + 1].size(); ++c2) {
            const int cost = arc_cost(j, cur, options[j + 1][c2]) + best[j + 1][c2];
            if (cost < pick_cost) {  // options are listed preferred first
                pick_cost = cost;
                pick = c2;
            }
        }
        cur = options[j + 1][pick];
        ev[j + 1].dir = cur;
    }
}

CurveDiagram canonicalize(const CurveDiagram& d) {
    std::vector<Event> ev = d.events();
    std::vector<Side> sides = d.sides();
    const int n = d.strands();
    std::vector<int> gap_count(static_cast<std::size_t>(n + 1), 0);
    for (const auto& e : ev)
        if (e.kind == EventKind::Crossing) ++gap_count[static_cast<std::size_t>(e.index)];
    // axis-parallel pieces are drawn as upper arcs
    for (std::size_t j = 0; j + 1 < ev.size(); ++j) {
        const Event& a = ev[j];
        const Event& b = ev[j + 1];
        if (a.kind == EventKind::Crossing || b.kind == EventKind::Crossing) continue;
        const int ka = a.kind == EventKind::Start ? 0 : a.index;
        const int kb = b.kind == EventKind::Start ? 0 : b.index;
        if (std::abs(ka - kb) == 1 && gap_count[static_cast<std::size_t>(std::min(ka, kb))] == 0)
            sides[j] = Side::Upper;
    }
    std::size_t first_puncture = 0;
    while (ev[first_puncture].kind != EventKind::Puncture) ++first_puncture;
    assign_directions(ev, sides, first_puncture);
    return CurveDiagram(n, std::move(ev), std::move(sides));
}

CurveDiagram reduce_impl(const CurveDiagram& d, std::mt19937_64* rng) {
    const auto problems = structural_violations(d);
    if (!problems.empty()) throw BraidError("reduce: invalid diagram: " + problems.front());
    Reducer r(d);
    r.run(rng);
    return canonicalize(r.build());
}

}  // namespace

CurveDiagram reduce(const CurveDiagram& d) { return reduce_impl(d, nullptr); }

CurveDiagram redirect_passages(const CurveDiagram& d, std::size_t junction) {
    if (junction >= d.events().size()) throw BraidError("redirect_passages: junction out of range");
    std::vector<Event> ev = d.events();
    assign_directions(ev, d.sides(), junction);
    return CurveDiagram(d.strands(), std::move(ev), d.sides());
}

CurveDiagram reduce_shuffled(const CurveDiagram& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return reduce_impl(d, &rng);
}

// ---------------------------------------------------------------------------
// the action of a half twist

CurveDiagram half_twist_unreduced(const CurveDiagram& d, int i, bool clockwise) {
    const int n = d.strands();
    if (i < 1 || i > n - 1) throw BraidError("half twist index out of range");
    const auto& ev = d.events();
    const auto& sides = d.sides();
    auto inside = [i](const Event& e) {
        return (e.kind == EventKind::Puncture && (e.index == i || e.index == i + 1)) ||
               (e.kind == EventKind::Crossing && e.index == i);
    };
    int gap_i_size = 0;
    for (const auto& e : ev)
        if (e.kind == EventKind::Crossing && e.index == i) ++gap_i_size;
    const AxisPos right_end = axis_pos({EventKind::Puncture, i + 1, 0, Direction::Right});

    struct Connector {
        std::tuple<int, AxisPos, AxisPos> angle_key;  // increasing angle from R around the disk
        std::size_t new_index;
    };
    std::map<int, std::vector<Connector>> by_gap;

    std::vector<Event> out;
    std::vector<Side> out_sides;
    std::vector<std::int64_t> order_key;  // per-gap ordering before dense renumbering
    auto push_event = [&](Event e, std::int64_t key) {
        out.push_back(e);
        order_key.push_back(key);
    };
    auto transformed = [&](const Event& e) -> std::pair<Event, std::int64_t> {
        Event t = e;
        if (!inside(e)) return {t, e.rank};
        if (e.kind == EventKind::Crossing) {
            t.rank = gap_i_size + 1 - e.rank;
            t.dir = e.dir == Direction::Up ? Direction::Down : Direction::Up;
        } else {
            t.index = e.index == i ? i + 1 : i;
            t.dir = e.dir == Direction::Right ? Direction::Left : Direction::Right;
        }
        return {t, t.rank};
    };

    {
        auto [t, key] = transformed(ev[0]);
        push_event(t, key);
    }
    for (std::size_t j = 0; j + 1 < ev.size(); ++j) {
        const bool in_a = inside(ev[j]), in_b = inside(ev[j + 1]);
        const Side s = sides[j];
        if (in_a == in_b) {
            out_sides.push_back(in_a ? opposite(s) : s);
        } else {
            const bool upper = s == Side::Upper;
            const int gap = (upper == clockwise) ? i + 1 : i - 1;
            const Event& outside_end = in_a ? ev[j + 1] : ev[j];
            const Event& inside_end = in_a ? ev[j] : ev[j + 1];
            const AxisPos x = axis_pos(outside_end), y = axis_pos(inside_end);
            Event c{EventKind::Crossing, gap, 0, Direction::Up};
            if (!in_a) {
                // outside part keeps side s, inside part is on the other side
                c.dir = upper ? Direction::Down : Direction::Up;
                out_sides.push_back(s);
                push_event(c, 0);
                out_sides.push_back(opposite(s));
            } else {
                c.dir = upper ? Direction::Up : Direction::Down;
                out_sides.push_back(opposite(s));
                push_event(c, 0);
                out_sides.push_back(s);
            }
            by_gap[gap].push_back({{x > right_end ? 0 : 1, x, -y}, out.size() - 1});
        }
        auto [t, key] = transformed(ev[j + 1]);
        push_event(t, key);
    }

    constexpr std::int64_t kFar = std::int64_t{1} << 40;
    for (auto& [gap, list] : by_gap) {
        // along the axis the new crossings appear in decreasing angle
        std::sort(list.begin(), list.end(),
                  [](const Connector& a, const Connector& b) { return a.angle_key > b.angle_key; });
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto ordinal = static_cast<std::int64_t>(k);
            order_key[list[k].new_index] = gap == i + 1 ? -kFar + ordinal : kFar + ordinal;
        }
    }
    // dense ranks per gap
    std::map<int, std::vector<std::size_t>> members;
    for (std::size_t j = 0; j < out.size(); ++j)
        if (out[j].kind == EventKind::Crossing) members[out[j].index].push_back(j);
    for (auto& [gap, idx] : members) {
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return order_key[a] < order_key[b]; });
        for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]].rank = static_cast<int>(r + 1);
    }
    return CurveDiagram(n, std::move(out), std::move(out_sides));
}

CurveDiagram apply_half_twist(const CurveDiagram& d, int i, bool clockwise) {
    return reduce(half_twist_unreduced(d, i, clockwise));
}

CurveDiagram apply_letter(const CurveDiagram& d, int i, int sign) {
    if (sign != 1 && sign != -1) throw BraidError("apply_letter: sign must be +1 or -1");
    return apply_half_twist(d, i, (sign > 0) == kPositiveTwistIsClockwise);
}

CurveDiagram apply_word(const CurveDiagram& d, const BraidWord& w) {
    if (w.strands() != d.strands()) throw BraidError("apply_word: strand count mismatch");
    CurveDiagram cur = d;
    for (const auto& l : w.letters()) cur = apply_letter(cur, l.index, l.sign);
    return cur;
}

CurveDiagram diagram_of(const BraidWord& w) { return apply_word(trivial_diagram(w.strands()), w); }

bool diagrams_equal(const CurveDiagram& a, const CurveDiagram& b) {
    if (!is_reduced(a) || !is_reduced(b)) throw BraidError("diagrams_equal: unreduced input");
    return a == b;
}

CurveDiagram mirror_diagram(const CurveDiagram& d) {
    std::vector<Event> ev = d.events();
    std::vector<Side> sides = d.sides();
    for (auto& e : ev)
        if (e.kind == EventKind::Crossing) e.dir = e.dir == Direction::Up ? Direction::Down : Direction::Up;
    for (auto& s : sides) s = opposite(s);
    return canonicalize(CurveDiagram(d.strands(), std::move(ev), std::move(sides)));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

const char* kind_name(EventKind k) {
    switch (k) {
        case EventKind::Start: return "start";
        case EventKind::Crossing: return "crossing";
        case EventKind::Puncture: return "puncture";
    }
    return "?";
}

const char* dir_name(Direction d) {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::Down: return "down";
        case Direction::Right: return "right";
        case Direction::Left: return "left";
    }
    return "?";
}

}  // namespace

std::string diagram_to_json(const CurveDiagram& d) {
    nlohmann::ordered_json j;
    j["n"] = d.strands();
    auto events = nlohmann::ordered_json::array();
    for (const auto& e : d.events()) {
        nlohmann::ordered_json je;
        je["kind"] = kind_name(e.kind);
        if (e.kind == EventKind::Crossing) je["gap"] = e.index;
        if (e.kind == EventKind::Puncture) je["puncture"] = e.index;
        je["direction"] = dir_name(e.dir);
        if (e.kind == EventKind::Crossing) je["rank"] = e.rank;
        events.push_back(std::move(je));
    }
    j["events"] = std::move(events);
    auto sides = nlohmann::ordered_json::array();
    for (Side s : d.sides()) sides.push_back(s == Side::Upper ? "upper" : "lower");
    j["sides"] = std::move(sides);
    return j.dump();
}

CurveDiagram diagram_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        std::vector<Event> events;
        for (const auto& je : j.at("events")) {
            Event e;
            const auto kind = je.at("kind").get<std::string>();
            const auto dir = je.at("direction").get<std::string>();
            if (kind == "start") {
                e.kind = EventKind::Start;
            } else if (kind == "crossing") {
                e.kind = EventKind::Crossing;
                e.index = je.at("gap").get<int>();
                e.rank = je.at("rank").get<int>();
            } else if (kind == "puncture") {
                e.kind = EventKind::Puncture;
                e.index = je.at("puncture").get<int>();
            } else {
                throw BraidError("unknown event kind '" + kind + "'");
            }
            if (dir == "up") e.dir = Direction::Up;
            else if (dir == "down") e.dir = Direction::Down;
            else if (dir == "right") e.dir = Direction::Right;
            else if (dir == "left") e.dir = Direction::Left;
            else throw BraidError("unknown direction '" + dir + "'");
            events.push_back(e);
        }
        std::vector<Side> sides;
        for (const auto& js : j.at("sides")) {
            const auto s = js.get<std::string>();
            if (s == "upper") sides.push_back(Side::Upper);
            else if (s == "lower") sides.push_back(Side::Lower);
            else throw BraidError("unknown side '" + s + "'");
        }
        return CurveDiagram(j.at("n").get<int>(), std::move(events), std::move(sides));
    } catch (const nlohmann::json::exception& e) {
        throw BraidError(std::string("diagram JSON: ") + e.what());
    }
}

}  // namespace windbraid
