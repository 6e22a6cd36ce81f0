#include "dsz/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsz/gf.hpp"
#include "dsz/zmatrix.hpp"

namespace dsz::cons {

using seq::Sequence;
using seq::Symbol;

seq::Sequence alt_block(std::uint32_t s, std::uint32_t n) {
    if (s < 3 || n < 2)
        throw std::invalid_argument("alt_block requires s >= 3, n >= 2");
    const std::uint32_t reps = (s - 2 + 1) / 2;  // ceil((s-2)/2)
    Sequence out;
    out.symbols.reserve(std::size_t(n - 1) * 2 * reps + 1);
    for (std::uint32_t k = 2; k <= n; ++k)
        for (std::uint32_t r = 0; r < reps; ++r) {
            out.symbols.push_back(1);
            out.symbols.push_back(k);
        }
    out.symbols.push_back(1);
    return out;
}

seq::Sequence rs(std::uint32_t s, std::uint32_t n) {
    if (s < 2 || n < 2) throw std::invalid_argument("rs requires s >= 2, n >= 2");
    if (s == 2) {
        Sequence out;
        out.symbols.reserve(2 * std::size_t(n) - 1);
        out.symbols.push_back(1);
        for (std::uint32_t k = 2; k <= n; ++k) {
            out.symbols.push_back(k);
            out.symbols.push_back(1);
        }
        return out;
    }
    if (n == 2) {
        Sequence out;
        out.symbols.reserve(s + 1);
        for (std::uint32_t i = 0; i <= s; ++i) out.symbols.push_back(1 + i % 2);
        return out;
    }
    // Retire symbol 1 and recurse on {2,...,n} with first occurrences in
    // reversed order n, n-1, ..., 2.
    Sequence out = alt_block(s, n);
    std::vector<Symbol> target;
    target.reserve(n - 1);
    for (std::uint32_t k = n; k >= 2; --k) target.push_back(k);
    const Sequence tail = relabel(rs(s - 1, n - 1), target);
    out.symbols.insert(out.symbols.end(), tail.symbols.begin(), tail.symbols.end());
    return out;
}

SmallOrderParams small_order_params(std::uint32_t k) {
    if (k > 5) throw std::invalid_argument("small_order_params: k too large");
    SmallOrderParams p;
    p.k = k;
    p.n = std::uint64_t(1) << (std::uint64_t(1) << k);
    p.mu = std::uint64_t(1) << k;
    p.s = k >= 1 ? k + 2 : 1;
    return p;
}

SmallOrderResult small_order(std::uint32_t k, std::uint64_t max_symbols) {
    const auto params = small_order_params(k);
    if (params.n * params.mu > max_symbols)
        throw std::invalid_argument("small_order: size cap exceeded");
    if (k == 0) {
        SmallOrderResult r;
        r.seq.symbols = {0, 1};
        r.pre_squash_length = 2;
        return r;
    }
    const SmallOrderResult prev = small_order(k - 1, max_symbols);
    const std::uint64_t n = small_order_params(k - 1).n;

    std::vector<Sequence> parts;
    parts.reserve(2 * n);
    std::vector<Symbol> labels(n);
    for (std::uint64_t j = 0; j < n; ++j) {
        // Column j, top to bottom.
        for (std::uint64_t i = 0; i < n; ++i)
            labels[i] = static_cast<Symbol>(i * n + j);
        parts.push_back(seq::reversed(seq::relabel(prev.seq, labels)));
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        // Row i, right to left.
        for (std::uint64_t j = 0; j < n; ++j)
            labels[j] = static_cast<Symbol>(i * n + (n - 1 - j));
        parts.push_back(seq::relabel(prev.seq, labels));
    }
    auto squashed = seq::concat_squash(parts);

    SmallOrderResult r;
    r.seq = std::move(squashed.seq);
    r.pre_squash_length = 2 * n * prev.pre_squash_length;
    r.removed = 2 * n * prev.removed + squashed.removed;
    return r;
}

std::uint64_t large_order_alt_bound(std::uint32_t q, std::uint32_t t,
                                    std::uint32_t s_hat) {
    std::uint64_t s = std::uint64_t(s_hat) + 1;
    for (std::uint32_t lvl = 2; lvl <= t; ++lvl)
        s = (lvl - 1) * s + 2 * (std::uint64_t(q) - lvl + 1);
    return s;
}

LayeredResult large_order(std::uint32_t q, std::uint32_t t, std::uint32_t s_hat,
                          std::uint64_t max_symbols) {
    if (t < 1) throw std::invalid_argument("large_order: t must be >= 1");
    if (s_hat < q) throw std::invalid_argument("large_order: s_hat must be >= q");
    const auto [p, a] = gf::prime_power(q);
    const gf::Field field(p, a);

    LayeredResult r;
    r.seq = rs(s_hat, q);
    if (r.seq.size() > max_symbols)
        throw std::invalid_argument("large_order: size cap exceeded");
    r.levels.push_back({1, r.seq.size(), r.seq.size()});

    for (std::uint32_t lvl = 2; lvl <= t; ++lvl) {
        const std::uint64_t pre = std::uint64_t(q) * q * r.seq.size();
        if (pre > max_symbols)
            throw std::invalid_argument("large_order: size cap exceeded");
        const auto mat = zm::build_poly_matrix(field, lvl);
        std::vector<Sequence> parts;
        parts.reserve(mat.rows.size());
        for (const auto& row : mat.rows)
            parts.push_back(seq::relabel(r.seq, row));
        auto squashed = seq::concat_squash(parts);
        r.seq = std::move(squashed.seq);
        r.levels.push_back({lvl, pre, r.seq.size()});
    }
    return r;
}

std::uint64_t medium_order_alt_bound(std::uint32_t t, std::uint32_t s_hat) {
    return (2 * std::uint64_t(t) + 1) * (s_hat - 1) + 2;
}

LayeredResult medium_order(std::uint32_t q, std::uint32_t t, std::uint32_t s_hat,
                           std::uint64_t max_symbols) {
    if (s_hat < 2 || s_hat > q)
        throw std::invalid_argument("medium_order: requires 2 <= s_hat <= q");
    const auto [p, a] = gf::prime_power(q);

    LayeredResult r;
    r.seq = rs(s_hat, q);
    if (r.seq.size() > max_symbols)
        throw std::invalid_argument("medium_order: size cap exceeded");
    r.levels.push_back({0, r.seq.size(), r.seq.size()});

    for (std::uint32_t lvl = 1; lvl <= t; ++lvl) {
        const std::uint64_t ext = std::uint64_t(a) << (lvl - 1);  // a * 2^{lvl-1}
        const gf::Field field(p, static_cast<std::uint32_t>(ext));  // GF(q_hat)
        const std::uint64_t q_hat = field.q();
        const std::uint64_t pre = q_hat * s_hat * r.seq.size();
        if (pre > max_symbols)
            throw std::invalid_argument("medium_order: size cap exceeded");
        const auto mat = zm::truncate_rows(zm::build_poly_matrix(field, 2), s_hat);
        std::vector<Sequence> parts;
        parts.reserve(mat.rows.size());
        for (const auto& row : mat.rows)
            parts.push_back(seq::relabel(r.seq, row));
        auto squashed = seq::concat_squash(parts);
        r.seq = std::move(squashed.seq);
        r.levels.push_back({lvl, pre, r.seq.size()});
    }
    return r;
}

ScaledResult scaled_small_order(std::uint32_t s, std::uint64_t n,
                                std::uint64_t max_symbols) {
    if (s < 3) throw std::invalid_argument("scaled_small_order: s must be >= 3");
    const std::uint32_t k = s - 2;
    if (k > 5) throw std::invalid_argument("scaled_small_order: s too large");
    const std::uint64_t n_prime = std::uint64_t(1) << (std::uint64_t(1) << k);
    if (n_prime > n)
        throw std::invalid_argument("scaled_small_order: s exceeds log2(log2(n)) + 2");

    const SmallOrderResult base = small_order(k, max_symbols);
    const std::uint64_t copies = n / n_prime;
    if (copies * base.seq.size() > max_symbols)
        throw std::invalid_argument("scaled_small_order: size cap exceeded");

    ScaledResult r;
    r.copies = copies;
    r.block_size = n_prime;
    r.seq.symbols.reserve(copies * base.seq.size());
    for (std::uint64_t c = 0; c < copies; ++c) {
        const Symbol offset = static_cast<Symbol>(c * n_prime);
        for (Symbol x : base.seq.symbols) r.seq.symbols.push_back(x + offset);
    }
    r.constant = double(r.seq.size()) /
                 (double(n) * double(std::uint64_t(1) << k));
    return r;
}

}  // namespace dsz::cons
