#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "windbraid/curve_diagram.hpp"
#include "windbraid/garside.hpp"

namespace windbraid {

/// Height order of the punctures first..last read off the label segments:
/// (p, q) in `relation` means p lies below q.
struct BelowOrder {
    int n = 0;
    int first = 1;
    int last = 1;
    std::vector<std::pair<int, int>> relation;  // transitively closed
    /// Punctures from bottom to top; a linear extension of `relation`.
    std::vector<int> bottom_to_top;
    /// Height rank of puncture first+k, 1 = lowest.
    std::vector<int> rank;
};

/// Throws BraidError when the relation has a cycle.
BelowOrder below_order(const CurveDiagram& d);
BelowOrder below_order(const CurveDiagram& d, int first, int last);

struct RelaxationStep {
    enum class Kind { Down, Up };
    Kind kind = Kind::Down;
    PermutationBraid move{2};
    BraidWord applied_word{2};  // all negative for Down, all positive for Up
};

/// One puncture dance lowering the largest label by one.
/// Requires LL > 0 and SL >= 0.
std::pair<RelaxationStep, CurveDiagram> relax_step_down(const CurveDiagram& d);
/// Mirror image: raises the smallest label by one. Requires SL < 0 and LL <= 0.
std::pair<RelaxationStep, CurveDiagram> relax_step_up(const CurveDiagram& d);

/// simple^sign.
struct GarsideFactor {
    PermutationBraid simple{2};
    int sign = 1;

    friend bool operator==(const GarsideFactor&, const GarsideFactor&) = default;
};

/// Factors of a shortest word in simples and their inverses, read off the
/// diagram by relaxation.
std::vector<GarsideFactor> geodesic_factorization(const BraidWord& w);
BraidWord word_from_factors(int strands, const std::vector<GarsideFactor>& factors);

/// A braid whose diagram is `d`.
BraidWord braid_from_diagram(const CurveDiagram& d);

struct UntangleResult {
    BraidWord word{2};
    CurveDiagram diagram = trivial_diagram(2);
    int steps = 0;
};

/// Acts by braids on strands i..j until the curve inside the round disk
/// around punctures i..j is completely untangled.
UntangleResult untangle_subdisk(const CurveDiagram& d, int i, int j);

bool is_completely_untangled(const CurveDiagram& d, int i, int j);

std::string factors_to_json(const std::vector<GarsideFactor>& factors);

}  // namespace windbraid
