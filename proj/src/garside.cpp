#include "windbraid/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace windbraid {

PermutationBraid::PermutationBraid(int strands) : image_(static_cast<std::size_t>(strands)) {
    if (strands < 1) throw BraidError("strand count must be at least 1");
    std::iota(image_.begin(), image_.end(), 0);
}

PermutationBraid::PermutationBraid(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
            throw BraidError("permutation image table is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (image_.empty()) throw BraidError("empty permutation");
}

PermutationBraid PermutationBraid::delta(int strands) {
    std::vector<int> img(static_cast<std::size_t>(strands));
    for (int k = 0; k < strands; ++k) img[static_cast<std::size_t>(k)] = strands - 1 - k;
    return PermutationBraid(std::move(img));
}

PermutationBraid PermutationBraid::generator(int strands, int index) {
    if (index < 1 || index >= strands) throw BraidError("generator index out of range");
    PermutationBraid p(strands);
    std::swap(p.image_[static_cast<std::size_t>(index - 1)], p.image_[static_cast<std::size_t>(index)]);
    return p;
}

bool PermutationBraid::is_identity() const {
    for (std::size_t k = 0; k < image_.size(); ++k)
        if (image_[k] != static_cast<int>(k)) return false;
    return true;
}

bool PermutationBraid::is_delta() const {
    const int n = strands();
    for (int k = 0; k < n; ++k)
        if (image_[static_cast<std::size_t>(k)] != n - 1 - k) return false;
    return true;
}

int PermutationBraid::length() const {
    int inv = 0;
    for (std::size_t a = 0; a < image_.size(); ++a)
        for (std::size_t b = a + 1; b < image_.size(); ++b)
            if (image_[a] > image_[b]) ++inv;
    return inv;
}

PermutationBraid PermutationBraid::then(const PermutationBraid& other) const {
    if (other.strands() != strands()) throw BraidError("strand count mismatch");
    std::vector<int> img(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k)
        img[k] = other.image_[static_cast<std::size_t>(image_[k])];
    return PermutationBraid(std::move(img));
}

PermutationBraid PermutationBraid::inverse_permutation() const {
    std::vector<int> img(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k)
        img[static_cast<std::size_t>(image_[k])] = static_cast<int>(k);
    return PermutationBraid(std::move(img));
}

bool PermutationBraid::starts_with(int index) const {
    return image_[static_cast<std::size_t>(index - 1)] > image_[static_cast<std::size_t>(index)];
}

bool PermutationBraid::ends_with(int index) const {
    // strands ending at positions index-1 and index have crossed
    int a = -1, b = -1;
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (image_[k] == index - 1) a = static_cast<int>(k);
        if (image_[k] == index) b = static_cast<int>(k);
    }
    return a > b;
}

bool product_is_simple(const PermutationBraid& a, const PermutationBraid& b) {
    return a.then(b).length() == a.length() + b.length();
}

int NormalForm::garside_length() const {
    return std::max(supremum(), 0) - std::min(infimum, 0);
}

PermutationBraid simple_from_word(const BraidWord& positive_word) {
    const int n = positive_word.strands();
    std::vector<int> at(static_cast<std::size_t>(n));  // position -> strand
    std::iota(at.begin(), at.end(), 0);
    std::vector<std::vector<bool>> crossed(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& l : positive_word.letters()) {
        if (l.sign < 0) throw BraidError("simple_from_word: non-positive letter");
        auto& x = at[static_cast<std::size_t>(l.index - 1)];
        auto& y = at[static_cast<std::size_t>(l.index)];
        const auto lo = static_cast<std::size_t>(std::min(x, y));
        const auto hi = static_cast<std::size_t>(std::max(x, y));
        if (crossed[lo][hi])
            throw BraidError("simple_from_word: non-simple word (strands " + std::to_string(lo + 1) +
                             " and " + std::to_string(hi + 1) + " cross twice)");
        crossed[lo][hi] = true;
        std::swap(x, y);
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) img[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
    return PermutationBraid(std::move(img));
}

BraidWord word_from_simple(const PermutationBraid& s) {
    // insertion sort: position k's strand sinks left past strands that end to its right
    const int n = s.strands();
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    const auto& final_pos = s.image();
    BraidWord w(n);
    for (int k = 1; k < n; ++k) {
        for (int q = k; q > 0; --q) {
            auto& left = at[static_cast<std::size_t>(q - 1)];
            auto& right = at[static_cast<std::size_t>(q)];
            if (final_pos[static_cast<std::size_t>(left)] < final_pos[static_cast<std::size_t>(right)])
                break;
            w.push_back({q, 1});
            std::swap(left, right);
        }
    }
    return w;
}

PermutationBraid tau(const PermutationBraid& s) {
    const int n = s.strands();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        img[static_cast<std::size_t>(k)] = n - 1 - s.image()[static_cast<std::size_t>(n - 1 - k)];
    return PermutationBraid(std::move(img));
}

PermutationBraid right_complement(const PermutationBraid& s) {
    return s.inverse_permutation().then(PermutationBraid::delta(s.strands()));
}

PermutationBraid left_complement(const PermutationBraid& s) {
    return PermutationBraid::delta(s.strands()).then(s.inverse_permutation());
}

bool is_left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
    for (int i = 1; i < a.strands(); ++i)
        if (b.starts_with(i) && !a.ends_with(i)) return false;
    return true;
}

bool is_right_weighted(const PermutationBraid& a, const PermutationBraid& b) {
    for (int i = 1; i < a.strands(); ++i)
        if (a.ends_with(i) && !b.starts_with(i)) return false;
    return true;
}

namespace {

// Moves generators from the head of b to the tail of a until S(b) is in F(a).
bool left_weight(PermutationBraid& a, PermutationBraid& b) {
    bool changed = false;
    const int n = a.strands();
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i < n; ++i) {
            if (b.starts_with(i) && !a.ends_with(i)) {
                const auto g = PermutationBraid::generator(n, i);
                a = a.then(g);
                b = g.then(b);  // g is an involution as a permutation
                moved = changed = true;
            }
        }
    }
    return changed;
}

// Delta^power * simples, with simples kept positive.
struct DeltaSimples {
    int power = 0;
    std::vector<PermutationBraid> simples;
};

DeltaSimples to_delta_simples(const BraidWord& w) {
    const int n = w.strands();
    DeltaSimples out;
    // entry i is stored as tau^(flips_total - flips_at[i]) of its real value
    std::vector<int> flips_at;
    int flips_total = 0;
    for (const auto& l : w.letters()) {
        const auto g = PermutationBraid::generator(n, l.index);
        if (l.sign > 0) {
            out.simples.push_back(g);
        } else {
            // s_i^-1 = (s_i^-1 Delta) Delta^-1, then Delta^-1 travels left
            out.simples.push_back(right_complement(g));
            ++flips_total;
            --out.power;
        }
        flips_at.push_back(flips_total - (l.sign > 0 ? 0 : 1));
    }
    for (std::size_t i = 0; i < out.simples.size(); ++i)
        if ((flips_total - flips_at[i]) % 2 != 0) out.simples[i] = tau(out.simples[i]);
    return out;
}

NormalForm normalize(int n, DeltaSimples ds) {
    NormalForm nf;
    nf.strands = n;
    std::vector<PermutationBraid> factors;
    for (auto& s : ds.simples) {
        if (s.is_identity()) continue;
        factors.push_back(s);
        for (std::size_t j = factors.size() - 1; j > 0; --j)
            if (!left_weight(factors[j - 1], factors[j])) break;
        while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
    }
    for (bool again = true; again;) {
        again = false;
        for (std::size_t j = 0; j + 1 < factors.size(); ++j)
            if (left_weight(factors[j], factors[j + 1])) again = true;
        std::erase_if(factors, [](const PermutationBraid& p) { return p.is_identity(); });
    }
    int power = ds.power;
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead].is_delta()) ++lead;
    power += static_cast<int>(lead);
    // Delta^power * Delta^lead * rest: leading deltas simply merge
    nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(lead), factors.end());
    nf.infimum = power;
    return nf;
}

BraidWord reversed(const BraidWord& w) {
    return BraidWord(w.strands(), std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

}  // namespace

NormalForm left_normal_form(const BraidWord& w) {
    return normalize(w.strands(), to_delta_simples(w));
}

NormalForm right_normal_form(const BraidWord& w) {
    const NormalForm rev = left_normal_form(reversed(w));
    NormalForm nf;
    nf.strands = w.strands();
    nf.infimum = rev.infimum;
    for (auto it = rev.factors.rbegin(); it != rev.factors.rend(); ++it)
        nf.factors.push_back(it->inverse_permutation());
    return nf;
}

InfSup inf_sup(const BraidWord& w) {
    const auto nf = left_normal_form(w);
    return {nf.infimum, nf.supremum(), nf.garside_length()};
}

BraidWord word_from_normal_form(const NormalForm& nf) {
    BraidWord w = delta_power_word(nf.strands, nf.infimum);
    for (const auto& f : nf.factors) w.append(word_from_simple(f));
    return w;
}

BraidWord word_from_right_normal_form(const NormalForm& nf) {
    BraidWord w(nf.strands);
    for (const auto& f : nf.factors) w.append(word_from_simple(f));
    w.append(delta_power_word(nf.strands, nf.infimum));
    return w;
}

bool equals(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw BraidError("equals: strand count mismatch");
    return left_normal_form(a) == left_normal_form(b);
}

std::optional<int> simple_tau_length(const PermutationBraid& s, long budget) {
    const int n = s.strands();
    if (s.is_identity()) return 0;
    std::vector<PermutationBraid> twists;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> img(static_cast<std::size_t>(n));
            std::iota(img.begin(), img.end(), 0);
            std::reverse(img.begin() + i, img.begin() + j + 1);
            twists.emplace_back(std::move(img));
        }
    std::map<PermutationBraid, int> dist;
    std::deque<PermutationBraid> queue;
    dist.emplace(PermutationBraid(n), 0);
    queue.emplace_back(n);
    long expanded = 0;
    while (!queue.empty()) {
        if (++expanded > budget) return std::nullopt;
        const PermutationBraid cur = queue.front();
        queue.pop_front();
        const int d = dist.at(cur);
        for (const auto& t : twists) {
            if (!product_is_simple(cur, t)) continue;
            PermutationBraid next = cur.then(t);
            if (dist.count(next)) continue;
            if (next == s) return d + 1;
            dist.emplace(next, d + 1);
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;  // unreachable: every simple is a product of generators
}

std::optional<int> tau_length(const BraidWord& w, long budget) {
    const NormalForm nf = right_normal_form(w);
    int total = nf.infimum < 0 ? -nf.infimum : nf.infimum;
    for (const auto& f : nf.factors) {
        const auto t = simple_tau_length(f, budget);
        if (!t) return std::nullopt;
        total += *t;
    }
    return total;
}

}  // namespace windbraid
