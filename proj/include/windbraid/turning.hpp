#pragma once

#include <stdexcept>
#include <utility>

#include "windbraid/curve_diagram.hpp"

namespace windbraid {

/// Taut turning of one arc, in half-units of the lifted tangent direction
/// (angle divided by -pi, so +1 unit is a clockwise half turn).
///
/// An upper arc leaves the axis at `a` heading in a direction of angle
/// 0 (Right), 90 (Up) or 180 (Left) degrees and lands at `b`. If a < b it
/// turns clockwise, landing with angle in [-180, 0]; if a > b it turns
/// counterclockwise, landing with angle in [180, 360]. Lower arcs are the
/// reflection of upper arcs.
inline int arc_turn(Side side, Direction start, AxisPos a, Direction end, AxisPos b) {
    auto flip = [](Direction d) {
        if (d == Direction::Up) return Direction::Down;
        if (d == Direction::Down) return Direction::Up;
        return d;
    };
    if (side == Side::Lower) return -arc_turn(Side::Upper, flip(start), a, flip(end), b);
    int from = 0;  // quarter turns
    switch (start) {
        case Direction::Right: from = 0; break;
        case Direction::Up: from = 1; break;
        case Direction::Left: from = 2; break;
        case Direction::Down: throw std::logic_error("upper arc cannot leave downward");
    }
    int to = 0;
    if (a < b) {
        switch (end) {
            case Direction::Right: to = 0; break;
            case Direction::Down: to = -1; break;
            case Direction::Left: to = -2; break;
            case Direction::Up: throw std::logic_error("upper arc cannot land upward");
        }
    } else {
        switch (end) {
            case Direction::Left: to = 2; break;
            case Direction::Down: to = 3; break;
            case Direction::Right: to = 4; break;
            case Direction::Up: throw std::logic_error("upper arc cannot land upward");
        }
    }
    return -(to - from);
}

/// Odd integers strictly between two half-unit values: the vertical
/// tangencies met strictly inside a monotone arc.
inline int odd_strictly_between(int x, int y) {
    if (x > y) std::swap(x, y);
    int count = 0;
    for (int v = x + 1; v < y; ++v)
        if (v % 2 != 0) ++count;
    return count;
}

}  // namespace windbraid
