#pragma once

#include <string>

#include "windbraid/curve_diagram.hpp"

namespace windbraid {

enum class Sign { Negative = -1, Neutral = 0, Positive = 1 };

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
std::string sign_name(Sign s);

/// Sign read from the diagram: which half-disk the first arc that is not a
/// horizontal step Start -> p1 -> p2 -> ... enters.
Sign dehornoy_sign(const CurveDiagram& d);
/// Index i such that the braid is sigma_i-positive or -negative: the first
/// arc leaving the horizontal line starts at puncture i-1. 0 for trivial.
int dehornoy_level(const CurveDiagram& d);

/// Handle reduction; throws BraidError after `budget` rewrites.
Sign handle_reduction_sign(const BraidWord& w, long budget = 1000000);
BraidWord handle_reduce(const BraidWord& w, long budget = 1000000);

struct ComplexityPair {
    int x = 0;
    int y = 0;

    friend bool operator==(const ComplexityPair&, const ComplexityPair&) = default;
    friend auto operator<=>(const ComplexityPair&, const ComplexityPair&) = default;
};

/// (LL, label span of the disk on punctures 2..n).
ComplexityPair complexity_pair(const CurveDiagram& d);

struct SlideResult {
    BraidWord word{2};
    CurveDiagram diagram = trivial_diagram(2);
    std::vector<int> slid;  // punctures moved into the first gap, left to right
    bool geometric = true;  // false when found by trying every slide
};

/// Pushes the punctures enclosed by the loop around the largest-label arc
/// into the gap left of puncture 1. Requires a sigma_1-positive diagram whose
/// disk on punctures 2..n is completely untangled, with LL > 0.
SlideResult slide_move(const CurveDiagram& d);

struct SigmaDefiniteReport {
    BraidWord input{2};
    BraidWord output{2};
    int sigma1_count = 0;  // occurrences of the lowest generator at level 1
    int sup = 0;
    int length_in = 0;     // Garside length of the input
    int length_out = 0;    // letters in the output
    int slides = 0;
    int assisted = 0;  // slides that needed an extra sigma_1-neutral simple first
    double c_effective = 0;  // length_out / length_in^2
};

/// Equal word in which sigma_1 occurs with a single sign, at most
/// max(sup, 0) times when positive.
BraidWord sigma1_definite_word(const BraidWord& w);
SigmaDefiniteReport sigma1_definite_report(const BraidWord& w);

/// Equal word that is sigma-definite: its lowest generator has one sign.
BraidWord sigma_definite_word(const BraidWord& w);

bool is_sigma_definite(const BraidWord& w);

std::string report_to_json(const SigmaDefiniteReport& r);

}  // namespace windbraid
