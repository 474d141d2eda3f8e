#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "windbraid/curve_diagram.hpp"
#include "windbraid/winding_labels.hpp"

namespace windbraid {

/// WINDBRAID_SEED if set, else `fallback`. Throws on a non-numeric value.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Enough to replay a failing case: word text, strand count and seed.
struct Failure {
    std::string check;
    std::string word;
    int strands = 0;
    std::uint64_t seed = 0;
    std::string expected;
    std::string actual;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct ValidationReport {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

std::string report_to_json(const ValidationReport& r);
ValidationReport validation_report_from_json(const std::string& text);

/// All checks run on one word, each failure tagged with its check name:
/// labels (extreme labels = sup, inf), mirror, delta_shift, extremal_arcs,
/// relaxation, sign, round_trip.
std::vector<Failure> check_word(const BraidWord& w, std::uint64_t seed);

/// `count` random words of length 0..max_len, plus every word of length
/// <= max_len when n = 3 and max_len <= 6. Words are checked on
/// `threads` threads (0: hardware concurrency); the report is in input order.
ValidationReport run_cross_validation(int n, long count, int max_len, std::uint64_t seed, unsigned threads = 0);

/// Runs f(k) for k in [0, count) on worker threads. f must be thread-safe.
void parallel_for(long count, const std::function<void(long)>& f, unsigned threads = 0);

/// Every word of length <= max_len over the signed generators, shortest first.
void for_each_word(int n, int max_len, const std::function<void(const BraidWord&)>& f);

struct ConjectureCase {
    std::string word;
    int first = 0;  // round disk on punctures first..last
    int last = 0;
    std::string beta_plus;
    int tangledness_before = 0;
    int tangledness_after = 0;
    int tau_before = 0;
    int tau_after = 0;
};

/// EXPERIMENTAL. The statement tested is open; a candidate is a case where
/// a disk move lowered the tangledness but not the tau-length.
struct ConjectureReport {
    int strands = 0;
    long braids = 0;
    long skipped = 0;  // no round disk with positive tangledness
    long moves = 0;    // (braid, disk, move) triples that lowered tangledness
    long supporting = 0;
    long budget_exhausted = 0;
    std::vector<ConjectureCase> candidates;
    std::vector<std::string> errors;  // internal errors, word text first
    std::uint64_t seed = 0;
};

/// Every round disk of positive tangledness and every simple braid or
/// inverse moving only its strands.
ConjectureReport conjecture_on(const BraidWord& w, long budget);
ConjectureReport conjecture_experiment(int n, long count, std::uint64_t seed, long budget, int max_len = 10);
std::string report_to_json(const ConjectureReport& r);

/// Rectilinear SVG 1.1 drawing: arcs as boxes over the axis, taller the
/// more arcs they enclose; the part before the first puncture dashed; every
/// arc annotated with the labels of the segments running through it.
std::string render_svg(const CurveDiagram& d, const LabelTrace& trace);
std::string render_svg(const CurveDiagram& d);

}  // namespace windbraid
