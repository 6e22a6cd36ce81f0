#include "dsz/sequence.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace dsz::seq {

std::size_t Sequence::alphabet_size() const {
    std::unordered_set<Symbol> seen(symbols.begin(), symbols.end());
    return seen.size();
}

std::vector<Symbol> first_occurrence_order(const Sequence& s) {
    std::vector<Symbol> order;
    std::unordered_set<Symbol> seen;
    for (Symbol x : s.symbols)
        if (seen.insert(x).second) order.push_back(x);
    return order;
}

Sequence relabel(const Sequence& s, std::span<const Symbol> target) {
    const auto order = first_occurrence_order(s);
    if (order.size() != target.size())
        throw std::invalid_argument("relabel: target length != alphabet size");
    std::unordered_set<Symbol> dup(target.begin(), target.end());
    if (dup.size() != target.size())
        throw std::invalid_argument("relabel: duplicate entries in target");
    std::unordered_map<Symbol, Symbol> map;
    map.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) map[order[i]] = target[i];
    Sequence out;
    out.symbols.reserve(s.size());
    for (Symbol x : s.symbols) out.symbols.push_back(map[x]);
    return out;
}

Sequence reversed(const Sequence& s) {
    Sequence out = s;
    std::reverse(out.symbols.begin(), out.symbols.end());
    return out;
}

SquashResult concat_squash(std::span<const Sequence> parts) {
    SquashResult r;
    for (const Sequence& part : parts) {
        for (Symbol x : part.symbols) {
            if (!r.seq.symbols.empty() && r.seq.symbols.back() == x) {
                ++r.removed;
            } else {
                r.seq.symbols.push_back(x);
            }
        }
    }
    return r;
}

bool is_repetition_free(const Sequence& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s.symbols[i] == s.symbols[i - 1]) return false;
    return true;
}

namespace {

// Greedy scan of the merged occurrence positions: each chosen entry extends
// the alternation iff it differs from the previous chosen symbol.
std::uint32_t alternation_from_positions(const std::vector<std::uint32_t>& pa,
                                         const std::vector<std::uint32_t>& pb) {
    if (pa.empty() || pb.empty()) return 0;
    std::uint32_t len = 0;
    int last = -1;  // 0 = a, 1 = b
    std::size_t ia = 0, ib = 0;
    while (ia < pa.size() || ib < pb.size()) {
        int cur;
        if (ib >= pb.size() || (ia < pa.size() && pa[ia] < pb[ib])) {
            cur = 0;
            ++ia;
        } else {
            cur = 1;
            ++ib;
        }
        if (cur != last) {
            ++len;
            last = cur;
        }
    }
    return len;
}

std::unordered_map<Symbol, std::vector<std::uint32_t>> occurrence_index(const Sequence& s) {
    std::unordered_map<Symbol, std::vector<std::uint32_t>> occ;
    for (std::uint32_t i = 0; i < s.size(); ++i)
        occ[s.symbols[i]].push_back(i);
    return occ;
}

}  // namespace

std::uint32_t max_alternation_pair(const Sequence& s, Symbol a, Symbol b) {
    if (a == b) throw std::invalid_argument("max_alternation_pair: a == b");
    std::uint32_t len = 0;
    int last = -1;
    for (Symbol x : s.symbols) {
        int cur;
        if (x == a) cur = 0;
        else if (x == b) cur = 1;
        else continue;
        if (cur != last) {
            ++len;
            last = cur;
        }
    }
    return len;
}

AlternationReport alternation_report(const Sequence& s) {
    AlternationReport rep;
    rep.exhaustive = true;
    const auto occ = occurrence_index(s);
    if (occ.size() < 2) {
        // Convention for degenerate inputs; a pair requires two symbols.
        rep.max_alternation = 0;
        rep.order = 0;
        return rep;
    }
    std::vector<Symbol> alpha;
    alpha.reserve(occ.size());
    for (const auto& [sym, _] : occ) alpha.push_back(sym);
    std::sort(alpha.begin(), alpha.end());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const auto& pa = occ.at(alpha[i]);
        for (std::size_t j = i + 1; j < alpha.size(); ++j) {
            const std::uint32_t len = alternation_from_positions(pa, occ.at(alpha[j]));
            ++rep.pair_histogram[len];
            if (len > rep.max_alternation) {
                rep.max_alternation = len;
                rep.witness_pair = {alpha[i], alpha[j]};
            }
        }
    }
    rep.order = rep.max_alternation > 0 ? rep.max_alternation - 1 : 0;
    return rep;
}

AlternationReport alternation_report_sampled(const Sequence& s, std::uint64_t count,
                                             std::uint64_t rng_seed) {
    AlternationReport rep;
    rep.exhaustive = false;
    const auto occ = occurrence_index(s);
    if (occ.size() < 2) return rep;
    std::vector<Symbol> alpha;
    alpha.reserve(occ.size());
    for (const auto& [sym, _] : occ) alpha.push_back(sym);
    std::sort(alpha.begin(), alpha.end());

    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const std::uint32_t len =
            alternation_from_positions(occ.at(alpha[i]), occ.at(alpha[j]));
        if (len > rep.max_alternation) {
            rep.max_alternation = len;
            rep.witness_pair = {alpha[std::min(i, j)], alpha[std::max(i, j)]};
        }
    }
    rep.order = rep.max_alternation > 0 ? rep.max_alternation - 1 : 0;
    return rep;
}

std::uint64_t length_upper_bound(std::uint64_t alphabet, std::uint64_t order) {
    return alphabet * (alphabet - 1) / 2 * order + 1;
}

bool satisfies_length_bound(const Sequence& s, std::uint32_t order) {
    if (s.empty()) return true;
    return s.size() <= length_upper_bound(s.alphabet_size(), order);
}

std::string to_text(const Sequence& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? " " : "") << s.symbols[i];
    return os.str();
}

Sequence from_text(const std::string& line) {
    Sequence s;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        unsigned long v;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad symbol token: " + tok);
        }
        if (pos != tok.size() || v > 0xffffffffUL)
            throw std::invalid_argument("bad symbol token: " + tok);
        s.symbols.push_back(static_cast<Symbol>(v));
    }
    return s;
}

std::string to_json(const Sequence& s) {
    nlohmann::json j;
    j["alphabet_size"] = s.alphabet_size();
    j["symbols"] = s.symbols;
    return j.dump();
}

Sequence from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Sequence s;
    s.symbols = j.at("symbols").get<std::vector<Symbol>>();
    return s;
}

}  // namespace dsz::seq
