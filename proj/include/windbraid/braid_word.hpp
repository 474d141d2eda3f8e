#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace windbraid {

/// Raised for malformed input: bad syntax, out-of-range indices,
/// strand-count mismatches and violated preconditions.
class BraidError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One Artin letter sigma_index^sign.
struct Letter {
    int index = 1;  // 1 .. n-1
    int sign = 1;   // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators of the braid group on `strands` strands.
/// The strand count is part of the value: the same letters on different
/// strand counts are different words.
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<Letter> letters = {});

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push_back(Letter l);
    void append(const BraidWord& other);

    /// Group inverse: reversed order, every sign flipped.
    BraidWord inverse() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

/// Parses the `s1 s2^-1 D D[2,4]` notation. `D` is the full half twist,
/// `D[i,j]` the positive half twist of strands i..j. Tokens are separated by
/// whitespace or `.`; an exponent `^k` repeats a term k times (inverse for
/// negative k).
BraidWord parse_word(std::string_view text, int strands);

/// Inverse of parse_word; exponents are never emitted.
std::string print_word(const BraidWord& w);

/// Cancels adjacent s_i s_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Replaces every crossing by its opposite crossing.
BraidWord mirror(const BraidWord& w);

/// `length` letters drawn uniformly from the 2(n-1) signed generators.
BraidWord random_word(int strands, int length, std::uint64_t seed);

/// Positive half twist on strands first..last written in Artin letters.
BraidWord half_twist_word(int strands, int first, int last);

/// Garside's Delta = s1 (s2 s1) ... (s_{n-1} ... s1).
BraidWord delta_word(int strands);

/// Delta^k as a word (inverse letters for negative k).
BraidWord delta_power_word(int strands, int k);

/// Same letters, indices shifted by `offset`, on `strands` strands.
BraidWord shift_indices(const BraidWord& w, int offset, int strands);

bool is_positive(const BraidWord& w);

}  // namespace windbraid
