#pragma once

#include <cstdint>
#include <vector>

#include "dsz/sequence.hpp"

namespace dsz::cons {

/// Default output size cap (symbol occurrences) for all builders.
inline constexpr std::uint64_t kDefaultMaxSymbols = 1u << 24;

/// Block of maximal 1-k alternations: for each k in [2, n], (1 k) repeated
/// ceil((s-2)/2) times, with a single trailing 1 after the last block.
/// The s = 2 form degenerates and is rejected; callers dispatch to the
/// order-2 base case instead.
seq::Sequence alt_block(std::uint32_t s, std::uint32_t n);

/// Roselle-Stanton sequence RS(s, n) over the alphabet {1, ..., n}.
/// Bases: RS(2,n) = 1 2 1 3 1 ... 1 n 1, RS(s,2) = 1 2 1 2 ... (length s+1).
seq::Sequence rs(std::uint32_t s, std::uint32_t n);

struct SmallOrderParams {
    std::uint32_t k = 0;
    std::uint64_t n = 0;   // 2^{2^k}
    std::uint64_t mu = 0;  // 2^k
    std::uint32_t s = 0;   // k+2 for k >= 1, else 1
};
SmallOrderParams small_order_params(std::uint32_t k);

struct SmallOrderResult {
    seq::Sequence seq;
    std::uint64_t pre_squash_length = 0;  // n(k) * mu(k), before any removal
    std::uint64_t removed = 0;            // removals across all levels
};

/// The squaring construction S(k): S(0) = two symbols, S(k+1) built from
/// column/row copies of S(k) over an n(k) x n(k) symbol matrix, with
/// repetition squashing applied at every level.  Symbol at matrix position
/// (i, j) (0-based) has id i * n(k) + j.
SmallOrderResult small_order(std::uint32_t k,
                             std::uint64_t max_symbols = kDefaultMaxSymbols);

struct LevelInfo {
    std::uint32_t level = 0;
    std::uint64_t pre_squash_length = 0;   // copies * |previous level|
    std::uint64_t post_squash_length = 0;
};

struct LayeredResult {
    seq::Sequence seq;
    std::vector<LevelInfo> levels;
};

/// Polynomial-order construction: base level rs(s_hat, q), then at each level
/// t' >= 2 the q^2 rows of the q^2 x q^{t'} polynomial matrix provide the
/// alphabets for q^2 relabeled copies, squashed at the boundaries.
/// Requires prime-power q and s_hat >= q.
LayeredResult large_order(std::uint32_t q, std::uint32_t t, std::uint32_t s_hat,
                          std::uint64_t max_symbols = kDefaultMaxSymbols);

/// Alternation-length bound for large_order: s_1 = s_hat + 1,
/// s_t = (t-1) s_{t-1} + 2(q - t + 1).  Measured order is <= result - 1.
std::uint64_t large_order_alt_bound(std::uint32_t q, std::uint32_t t,
                                    std::uint32_t s_hat);

/// Medium-order construction: base level rs(s_hat, q); at level t' >= 1 the
/// degree-2 matrix over GF(q^{2^{t'-1}}) is truncated to its first
/// q_hat * s_hat rows, whose alphabets label the relabeled copies.
/// Requires prime-power q and 2 <= s_hat <= q.
LayeredResult medium_order(std::uint32_t q, std::uint32_t t, std::uint32_t s_hat,
                           std::uint64_t max_symbols = kDefaultMaxSymbols);

/// Alternation-length bound for medium_order: (2t+1)(s_hat - 1) + 2.
std::uint64_t medium_order_alt_bound(std::uint32_t t, std::uint32_t s_hat);

struct ScaledResult {
    seq::Sequence seq;
    std::uint64_t copies = 0;
    std::uint64_t block_size = 0;  // n' = 2^{2^{s-2}}
    double constant = 0.0;         // |seq| / (n * 2^{s-2})
};

/// floor(n / n') disjoint-alphabet copies of S(s-2), n' = 2^{2^{s-2}}.
/// Requires 3 <= s <= log2(log2(n)) + 2.
ScaledResult scaled_small_order(std::uint32_t s, std::uint64_t n,
                                std::uint64_t max_symbols = kDefaultMaxSymbols);

}  // namespace dsz::cons
