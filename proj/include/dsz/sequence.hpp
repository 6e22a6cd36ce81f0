#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dsz::seq {

using Symbol = std::uint32_t;

/// A sequence of symbol identifiers over a finite alphabet.
struct Sequence {
    std::vector<Symbol> symbols;

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    /// Number of distinct symbols appearing.
    std::size_t alphabet_size() const;

    bool operator==(const Sequence&) const = default;
};

/// Distinct symbols in order of first appearance.
std::vector<Symbol> first_occurrence_order(const Sequence& s);

/// Maps the i-th distinct symbol (first-occurrence order) to target[i].
/// target must have exactly alphabet_size entries, no duplicates.
Sequence relabel(const Sequence& s, std::span<const Symbol> target);

Sequence reversed(const Sequence& s);

struct SquashResult {
    Sequence seq;
    std::uint64_t removed = 0;
};

/// Concatenates parts, then removes one element of every adjacent equal pair,
/// leftmost first, until no immediate repetition remains.
SquashResult concat_squash(std::span<const Sequence> parts);

bool is_repetition_free(const Sequence& s);

/// Length of the longest a/b alternation (subsequence over {a,b} with no two
/// equal consecutive chosen entries).  Requires a != b.
std::uint32_t max_alternation_pair(const Sequence& s, Symbol a, Symbol b);

struct AlternationReport {
    std::uint32_t max_alternation = 0;
    std::uint32_t order = 0;  // max_alternation - 1, 0 for degenerate inputs
    std::pair<Symbol, Symbol> witness_pair{0, 0};
    bool exhaustive = true;  // false: sampled, max_alternation is a lower bound
    std::map<std::uint32_t, std::uint64_t> pair_histogram;  // exhaustive only
};

/// Exact report over all co-occurring symbol pairs.
AlternationReport alternation_report(const Sequence& s);

/// Lower-bound report from `count` uniformly sampled pairs.
AlternationReport alternation_report_sampled(const Sequence& s, std::uint64_t count,
                                             std::uint64_t rng_seed);

/// Pigeonhole length bound: |S| <= C(alphabet, 2) * order + 1.
std::uint64_t length_upper_bound(std::uint64_t alphabet, std::uint64_t order);
bool satisfies_length_bound(const Sequence& s, std::uint32_t order);

// Text format: space-separated symbol ids on one line.
std::string to_text(const Sequence& s);
Sequence from_text(const std::string& line);  // throws on malformed input

std::string to_json(const Sequence& s);
Sequence from_json(const std::string& text);

}  // namespace dsz::seq
