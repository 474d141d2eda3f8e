#pragma once

#include <optional>
#include <vector>

#include "windbraid/braid_word.hpp"

namespace windbraid {

/// A simple braid (positive braid in which any two strands cross at most
/// once), stored as its permutation. `image()[k]` is the final position,
/// 0-based, of the strand that starts at position k, reading the braid left
/// to right.
class PermutationBraid {
public:
    /// Identity of the given strand count.
    explicit PermutationBraid(int strands);
    /// Throws unless `image` is a bijection of {0..n-1}.
    explicit PermutationBraid(std::vector<int> image);

    static PermutationBraid identity(int strands) { return PermutationBraid(strands); }
    static PermutationBraid delta(int strands);
    static PermutationBraid generator(int strands, int index);  // sigma_index

    int strands() const { return static_cast<int>(image_.size()); }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    bool is_delta() const;
    /// Number of crossings = inversion count.
    int length() const;

    /// Permutation of the product this * other (this first).
    PermutationBraid then(const PermutationBraid& other) const;
    PermutationBraid inverse_permutation() const;

    /// sigma_i is a left divisor (i in the starting set).
    bool starts_with(int index) const;
    /// sigma_i is a right divisor (i in the finishing set).
    bool ends_with(int index) const;

    friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;
    friend auto operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

private:
    std::vector<int> image_;
};

/// Whether the positive product a*b is again simple.
bool product_is_simple(const PermutationBraid& a, const PermutationBraid& b);

/// Braid = Delta^infimum * factors[0] * ... (left form) or
///         factors[0] * ... * Delta^infimum (right form).
/// No factor is the identity or Delta.
struct NormalForm {
    int strands = 2;
    int infimum = 0;
    std::vector<PermutationBraid> factors;

    int supremum() const { return infimum + static_cast<int>(factors.size()); }
    int garside_length() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct InfSup {
    int inf = 0;
    int sup = 0;
    int garside_length = 0;

    friend bool operator==(const InfSup&, const InfSup&) = default;
};

PermutationBraid simple_from_word(const BraidWord& positive_word);
BraidWord word_from_simple(const PermutationBraid& s);

/// Delta^-1 s Delta.
PermutationBraid tau(const PermutationBraid& s);
/// s^-1 Delta.
PermutationBraid right_complement(const PermutationBraid& s);
/// Delta s^-1.
PermutationBraid left_complement(const PermutationBraid& s);

NormalForm left_normal_form(const BraidWord& w);
NormalForm right_normal_form(const BraidWord& w);
InfSup inf_sup(const BraidWord& w);

/// Pairwise left-weightedness: S(b) is contained in F(a).
bool is_left_weighted(const PermutationBraid& a, const PermutationBraid& b);
/// Pairwise right-weightedness: F(a) is contained in S(b).
bool is_right_weighted(const PermutationBraid& a, const PermutationBraid& b);

/// Word of a left normal form: Delta^inf followed by the factors.
BraidWord word_from_normal_form(const NormalForm& nf);
/// Word of a right normal form: the factors followed by Delta^inf.
BraidWord word_from_right_normal_form(const NormalForm& nf);

bool equals(const BraidWord& a, const BraidWord& b);

/// Minimal number of round half twists D[i,j] whose positive product is s,
/// or nullopt once more than `budget` nodes have been expanded.
std::optional<int> simple_tau_length(const PermutationBraid& s, long budget = 100000);

/// Sum of simple_tau_length over the right normal form factors plus |inf|
/// for the Delta power; nullopt when any factor exceeds the budget.
std::optional<int> tau_length(const BraidWord& w, long budget = 100000);

}  // namespace windbraid
