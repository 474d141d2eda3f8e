#include "windbraid/braid_word.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace windbraid {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw BraidError("strand count must be at least 1");
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index > strands_ - 1)
            throw BraidError("generator index " + std::to_string(l.index) +
                             " out of range [1, " + std::to_string(strands_ - 1) + "]");
        if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
    }
}

void BraidWord::push_back(Letter l) {
    if (l.index < 1 || l.index > strands_ - 1)
        throw BraidError("generator index " + std::to_string(l.index) + " out of range");
    if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
    letters_.push_back(l);
}

void BraidWord::append(const BraidWord& other) {
    if (other.strands_ != strands_) throw BraidError("strand count mismatch");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.sign = -l.sign;
    return BraidWord(strands_, std::move(out));
}

BraidWord half_twist_word(int strands, int first, int last) {
    if (first < 1 || last > strands || first > last)
        throw BraidError("half twist D[" + std::to_string(first) + "," + std::to_string(last) +
                         "] out of range for " + std::to_string(strands) + " strands");
    BraidWord w(strands);
    for (int top = first + 1; top <= last; ++top)
        for (int i = top - 1; i >= first; --i) w.push_back({i, 1});
    return w;
}

BraidWord delta_word(int strands) { return half_twist_word(strands, 1, strands); }

BraidWord delta_power_word(int strands, int k) {
    BraidWord d = delta_word(strands);
    if (k < 0) d = d.inverse();
    BraidWord w(strands);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) w.append(d);
    return w;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, int strands) : text_(text), strands_(strands) {}

    BraidWord run() {
        BraidWord out(strands_);
        skip_separators();
        while (pos_ < text_.size()) {
            BraidWord term = generator();
            int exponent = 1;
            if (peek() == '^') {
                ++pos_;
                bool negative = false;
                if (peek() == '-') {
                    negative = true;
                    ++pos_;
                }
                exponent = integer();
                if (negative) exponent = -exponent;
            }
            if (pos_ < text_.size() && !is_separator(text_[pos_]))
                fail("expected separator", pos_);
            if (exponent < 0) term = term.inverse();
            for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.append(term);
            skip_separators();
        }
        return out;
    }

private:
    static bool is_separator(char c) {
        return c == '.' || std::isspace(static_cast<unsigned char>(c));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw BraidError("syntax error at position " + std::to_string(at) + ": " + what);
    }

    void skip_separators() {
        while (pos_ < text_.size() && is_separator(text_[pos_])) ++pos_;
    }

    int integer() {
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected integer", start);
        return static_cast<int>(value);
    }

    BraidWord generator() {
        const std::size_t start = pos_;
        const char c = peek();
        if (c == 's') {
            ++pos_;
            const int i = integer();
            if (i < 1 || i > strands_ - 1)
                throw BraidError("generator index " + std::to_string(i) + " at position " +
                                 std::to_string(start) + " out of range [1, " +
                                 std::to_string(strands_ - 1) + "]");
            return BraidWord(strands_, {{i, 1}});
        }
        if (c == 'D') {
            ++pos_;
            if (peek() != '[') return delta_word(strands_);
            ++pos_;
            const int first = integer();
            if (peek() != ',') fail("expected ','", pos_);
            ++pos_;
            const int last = integer();
            if (peek() != ']') fail("expected ']'", pos_);
            ++pos_;
            if (first < 1 || last > strands_ || first >= last)
                throw BraidError("half twist range at position " + std::to_string(start) +
                                 " out of range");
            return half_twist_word(strands_, first, last);
        }
        fail("expected 's' or 'D'", start);
    }

    std::string_view text_;
    int strands_;
    std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
    if (strands < 2) throw BraidError("at least 2 strands required");
    return Parser(text, strands).run();
}

std::string print_word(const BraidWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << 's' << l.index;
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord(w.strands(), std::move(stack));
}

BraidWord mirror(const BraidWord& w) {
    std::vector<Letter> out = w.letters();
    for (auto& l : out) l.sign = -l.sign;
    return BraidWord(w.strands(), std::move(out));
}

BraidWord random_word(int strands, int length, std::uint64_t seed) {
    if (strands < 2) throw BraidError("at least 2 strands required");
    if (length < 0) throw BraidError("negative length");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2 * (strands - 1) - 1);
    BraidWord w(strands);
    for (int k = 0; k < length; ++k) {
        const int g = pick(rng);
        w.push_back({g / 2 + 1, (g % 2 == 0) ? 1 : -1});
    }
    return w;
}

BraidWord shift_indices(const BraidWord& w, int offset, int strands) {
    BraidWord out(strands);
    for (const auto& l : w.letters()) out.push_back({l.index + offset, l.sign});
    return out;
}

bool is_positive(const BraidWord& w) {
    for (const auto& l : w.letters())
        if (l.sign < 0) return false;
    return true;
}

}  // namespace windbraid
