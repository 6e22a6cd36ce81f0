#pragma once

#include <cstdint>
#include <string>

#include "dsz/sequence.hpp"

namespace dsz::oracle {

struct LambdaResult {
    std::uint32_t s = 0;
    std::uint32_t n = 0;
    std::uint64_t value = 0;
    seq::Sequence witness;
    std::uint64_t nodes_explored = 0;
    bool exact = true;  // false when the node budget ran out
};

/// Exact lambda(s, n) by depth-first extension with incremental per-pair
/// alternation counters, canonical first-occurrence symmetry reduction, and
/// pigeonhole-slack pruning.  budget == 0 means unlimited; a spent budget
/// returns the best sequence found so far, flagged inexact.
LambdaResult lambda_exhaustive(std::uint32_t s, std::uint32_t n,
                               std::uint64_t budget = 0);

/// C(n, 2) * s + 1.
std::uint64_t trivial_upper_bound(std::uint32_t s, std::uint32_t n);

/// Exact rows: n for s = 1, 2n - 1 for s = 2.  Other s are refused.
std::uint64_t theorem1_small_s(std::uint32_t s, std::uint32_t n);

std::string to_json(const LambdaResult& r);

}  // namespace dsz::oracle
