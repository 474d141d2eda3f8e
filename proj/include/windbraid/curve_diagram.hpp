#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windbraid/braid_word.hpp"

namespace windbraid {

enum class EventKind { Start, Crossing, Puncture };
enum class Side { Upper, Lower };
/// Up/Down for axis crossings, Right/Left for passages through a puncture.
enum class Direction { Up, Down, Right, Left };

inline Side opposite(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }

/// One point where the curve meets the horizontal axis.
struct Event {
    EventKind kind = EventKind::Start;
    int index = 0;  // gap 0..n for crossings, puncture 1..n for punctures
    int rank = 0;   // 1-based left-to-right rank inside the gap (crossings only)
    Direction dir = Direction::Right;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Totally ordered axis position: Start < gap 0 crossings < p1 < gap 1 < ...
using AxisPos = std::int64_t;
AxisPos axis_pos(const Event& e);

/// Combinatorial model of a curve diagram: the sequence of axis events met
/// along the curve from the boundary point -1, and for each consecutive pair
/// the half-disk containing the arc between them.
class CurveDiagram {
public:
    CurveDiagram(int strands, std::vector<Event> events, std::vector<Side> sides);

    int strands() const { return n_; }
    const std::vector<Event>& events() const { return events_; }
    const std::vector<Side>& sides() const { return sides_; }
    std::size_t crossing_count() const;

    /// Event indices of gap g's crossings in left-to-right order.
    std::vector<std::size_t> gap_order(int gap) const;
    /// Event index of the passage through puncture k.
    std::size_t puncture_event(int k) const;
    std::size_t first_puncture_event() const;

    bool is_trivial() const;

    friend bool operator==(const CurveDiagram&, const CurveDiagram&) = default;

private:
    int n_;
    std::vector<Event> events_;
    std::vector<Side> sides_;
};

CurveDiagram trivial_diagram(int strands);

/// Violations of the structural and reducedness invariants, each naming the
/// invariant first ("embeddedness: ..."). Empty iff the diagram is valid.
std::vector<std::string> validate(const CurveDiagram& d);
/// Structural invariants only (reducedness not required).
std::vector<std::string> structural_violations(const CurveDiagram& d);
bool is_reduced(const CurveDiagram& d);

/// Deletes empty bigons and half-bigons at punctures until none remain,
/// renumbers ranks, pushes axis-parallel arcs up and fixes the canonical
/// passage direction at every puncture.
CurveDiagram reduce(const CurveDiagram& d);

/// Same curve with the passage directions re-chosen so that as few vertical
/// tangencies as possible come after event `junction`.
CurveDiagram redirect_passages(const CurveDiagram& d, std::size_t junction);

/// Like reduce, but removes bigons in an order driven by `seed`.
/// The result must not depend on the seed.
CurveDiagram reduce_shuffled(const CurveDiagram& d, std::uint64_t seed);

/// Which geometric rotation a positive generator performs. Fixed by the
/// calibration tests; exposed so they can try both.
constexpr bool kPositiveTwistIsClockwise = true;

/// Half twist of punctures i, i+1, before reduction.
CurveDiagram half_twist_unreduced(const CurveDiagram& d, int i, bool clockwise);
CurveDiagram apply_half_twist(const CurveDiagram& d, int i, bool clockwise);

CurveDiagram apply_letter(const CurveDiagram& d, int i, int sign);
CurveDiagram apply_word(const CurveDiagram& d, const BraidWord& w);
/// Curve diagram of the braid `w`.
CurveDiagram diagram_of(const BraidWord& w);

bool diagrams_equal(const CurveDiagram& a, const CurveDiagram& b);
CurveDiagram mirror_diagram(const CurveDiagram& d);

std::string diagram_to_json(const CurveDiagram& d);
CurveDiagram diagram_from_json(const std::string& text);

}  // namespace windbraid
