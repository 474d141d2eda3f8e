#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "windbraid/curve_diagram.hpp"

namespace windbraid {

/// A vertical tangency of the curve. `value` is the lifted tangent direction
/// there in half-units (always odd). `param` is its position along the
/// curve: event j sits at j, tangencies inside the arc after event j at
/// fractional values in (j, j+1).
struct Tangency {
    double param = 0;
    std::size_t anchor = 0;  // event whose neighbourhood holds the tangency
    int value = 0;
    int direction = 0;       // +1 if the lift increases through it
    bool rightmost = false;  // a rightmost point of the curve, else leftmost
    int gap = 0;
    /// Axis slot of the extremity: 2k when the curve turns while passing
    /// through puncture k, 2g+1 when it turns inside gap g.
    int slot = 0;
};

struct LabelSegment {
    int label = 0;
    std::size_t from = 0;  // first event touched
    std::size_t to = 0;    // last event touched
    int left_gap = 0;
    int right_gap = 0;
    int left_slot = 0;
    int right_slot = 0;
    bool left_terminal = false;  // extremity is the curve's end, not a tangency
    bool right_terminal = false;
    double start_param = 0;
    double end_param = 0;
};

struct LabelTrace {
    std::vector<int> tilde;  // lifted tangent direction at each event, half-units
    std::vector<LabelSegment> segments;
    std::vector<Tangency> tangencies;
    std::size_t first_puncture = 0;
};

enum class Scope { Full, Restricted };

LabelTrace label_trace(const CurveDiagram& d);

struct ExtremeLabels {
    int largest = 0;
    int smallest = 0;
    friend bool operator==(const ExtremeLabels&, const ExtremeLabels&) = default;
};

ExtremeLabels extreme_labels(const LabelTrace& t, Scope scope = Scope::Restricted);
ExtremeLabels extreme_labels(const CurveDiagram& d, Scope scope = Scope::Restricted);

/// Whether a segment takes part in the restricted diagram.
bool in_restricted(const LabelTrace& t, const LabelSegment& s);

struct ExtremalArcStats {
    int count_largest = 0;
    int count_smallest = 0;
    std::vector<int> right_gaps_largest, left_gaps_largest;
    std::vector<int> right_gaps_smallest, left_gaps_smallest;
    /// Right extremity slots of largest-label segments lying strictly
    /// inside the restricted curve (both ends are tangencies).
    std::vector<int> proper_right_slots_largest;
    std::vector<int> proper_left_slots_largest;
};

ExtremalArcStats extremal_arc_stats(const CurveDiagram& d);

/// One piece of the curve inside a round disk.
struct DiskComponent {
    std::size_t first_event = 0;
    std::size_t last_event = 0;
    bool two_ended = true;  // false when the piece runs into the curve's end
    double start_param = 0;
    double end_param = 0;
    int shift = 0;
    std::vector<int> labels;  // shifted labels of the segments it meets, in order
    int start_label = 0;
    int end_label = 0;
    int largest = 0;
    int smallest = 0;
    int rightmost_reversals = 0;
    int leftmost_reversals = 0;
};

struct SubdiskLabels {
    std::vector<DiskComponent> components;
    int largest = 0;
    int smallest = 0;
};

/// Labels of the curve inside the round disk around punctures i..j.
SubdiskLabels subdisk_labels(const CurveDiagram& d, int i, int j);

int tangledness(const CurveDiagram& d, int i, int j);

std::string label_trace_to_json(const LabelTrace& t);

}  // namespace windbraid
