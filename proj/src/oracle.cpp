#include "dsz/oracle.hpp"

#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace dsz::oracle {

namespace {

// DFS over canonical sequences: a new symbol may only be introduced as the
// smallest unused id.  Per pair (a < b) we keep the greedy alternation length
// and the last-seen member; appending c after predecessor p always extends
// the (c, p) alternation, so total slack bounds the remaining extensions.
class Search {
public:
    Search(std::uint32_t s, std::uint32_t n, std::uint64_t budget)
        : n_(n), cap_(s + 1), budget_(budget) {
        const std::size_t pairs = std::size_t(n) * (n - 1) / 2;
        count_.assign(pairs, 0);
        last_.assign(pairs, kNone);
        slack_ = std::uint64_t(pairs) * cap_;
        cur_.reserve(trivial_upper_bound(s, n));
    }

    void run(LambdaResult& out) {
        dfs();
        out.value = best_.size();
        out.witness.symbols.assign(best_.begin(), best_.end());
        out.nodes_explored = nodes_;
        out.exact = !budget_hit_;
    }

private:
    static constexpr std::uint8_t kNone = 0xff;

    static std::size_t pair_index(std::uint32_t a, std::uint32_t b) {
        // requires a < b
        return std::size_t(b) * (b - 1) / 2 + a;
    }

    struct Touch {
        std::size_t pair;
        std::uint8_t old_last;
        std::uint8_t delta;
    };

    bool can_append(std::uint32_t c) const {
        if (!cur_.empty() && cur_.back() == c) return false;
        for (std::uint32_t d = 0; d < used_; ++d) {
            if (d == c) continue;
            const std::size_t pi = d < c ? pair_index(d, c) : pair_index(c, d);
            // An untouched pair means c is new; d's earlier first occurrence
            // already contributes 1, so the pair jumps to 2, within cap_.
            if (last_[pi] == kNone) continue;
            if (last_[pi] != c && count_[pi] >= cap_) return false;
        }
        return true;
    }

    void append(std::uint32_t c, std::vector<Touch>& touched) {
        if (c == used_) ++used_;
        cur_.push_back(static_cast<std::uint8_t>(c));
        for (std::uint32_t d = 0; d < used_; ++d) {
            if (d == c) continue;
            const std::size_t pi = d < c ? pair_index(d, c) : pair_index(c, d);
            if (last_[pi] == c) continue;
            const std::uint8_t delta = last_[pi] == kNone ? 2 : 1;
            count_[pi] += delta;
            slack_ -= delta;
            touched.push_back({pi, last_[pi], delta});
            last_[pi] = static_cast<std::uint8_t>(c);
        }
    }

    void undo(std::uint32_t c, const std::vector<Touch>& touched) {
        for (const Touch& t : touched) {
            count_[t.pair] -= t.delta;
            slack_ += t.delta;
            last_[t.pair] = t.old_last;
        }
        cur_.pop_back();
        if (c + 1 == used_ && count_sym_zero(c)) --used_;
    }

    bool count_sym_zero(std::uint32_t c) const {
        for (std::uint8_t x : cur_)
            if (x == c) return false;
        return true;
    }

    void dfs() {
        if (cur_.size() > best_.size()) best_ = cur_;
        if (budget_hit_) return;
        // Every append after the first consumes slack, so no extension can
        // beat the incumbent once this holds.
        if (cur_.size() + slack_ + (cur_.empty() ? 1 : 0) <= best_.size()) return;
        const std::uint32_t limit = used_ < n_ ? used_ + 1 : n_;
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (!can_append(c)) continue;
            ++nodes_;
            if (budget_ != 0 && nodes_ > budget_) {
                budget_hit_ = true;
                return;
            }
            std::vector<Touch> touched;
            append(c, touched);
            dfs();
            undo(c, touched);
            if (budget_hit_) return;
        }
    }

    std::uint32_t n_;
    std::uint32_t cap_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    std::uint32_t used_ = 0;
    std::uint64_t slack_ = 0;
    std::vector<std::uint8_t> count_, last_;
    std::vector<std::uint8_t> cur_, best_;
};

}  // namespace

LambdaResult lambda_exhaustive(std::uint32_t s, std::uint32_t n, std::uint64_t budget) {
    if (s < 1 || n < 1) throw std::invalid_argument("lambda_exhaustive: s, n >= 1");
    if (n > 200) throw std::invalid_argument("lambda_exhaustive: n too large");
    LambdaResult out;
    out.s = s;
    out.n = n;
    Search search(s, n, budget);
    search.run(out);
    return out;
}

std::uint64_t trivial_upper_bound(std::uint32_t s, std::uint32_t n) {
    return std::uint64_t(n) * (n - 1) / 2 * s + 1;
}

std::uint64_t theorem1_small_s(std::uint32_t s, std::uint32_t n) {
    if (s == 1) return n;
    if (s == 2) return 2 * std::uint64_t(n) - 1;
    throw std::invalid_argument("theorem1_small_s: only s in {1, 2} are exact");
}

std::string to_json(const LambdaResult& r) {
    nlohmann::json j;
    j["s"] = r.s;
    j["n"] = r.n;
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["witness"] = r.witness.symbols;
    j["nodes_explored"] = r.nodes_explored;
    return j.dump();
}

}  // namespace dsz::oracle
