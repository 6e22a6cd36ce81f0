#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "brute_force.hpp"
#include "dsz/sequence.hpp"

using namespace dsz::seq;

namespace {

Sequence make(std::initializer_list<Symbol> syms) {
    Sequence s;
    s.symbols = syms;
    return s;
}

Sequence random_sequence(std::mt19937_64& rng, std::size_t max_len,
                         std::uint32_t max_alpha) {
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<Symbol> sym_d(0, max_alpha - 1);
    Sequence s;
    const std::size_t len = len_d(rng);
    for (std::size_t i = 0; i < len; ++i) s.symbols.push_back(sym_d(rng));
    return s;
}

}  // namespace

TEST_CASE("relabel") {
    const Sequence s = make({1, 2, 1});
    const std::vector<Symbol> target{3, 2};
    CHECK(relabel(s, target) == make({3, 2, 3}));

    CHECK(relabel(make({1, 2}), std::vector<Symbol>{7, 9}) == make({7, 9}));

    // Identity: relabel onto the first-occurrence order.
    const Sequence t = make({4, 1, 4, 2, 1});
    CHECK(relabel(t, first_occurrence_order(t)) == t);

    CHECK_THROWS_AS(relabel(s, std::vector<Symbol>{1}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(s, std::vector<Symbol>{1, 1}), std::invalid_argument);
}

TEST_CASE("reverse") {
    CHECK(reversed(make({1, 2})) == make({2, 1}));
    CHECK(reversed(make({1, 2, 1})) == make({1, 2, 1}));
    const Sequence s = make({3, 1, 4, 1, 5});
    CHECK(reversed(reversed(s)) == s);
}

TEST_CASE("concat_squash") {
    // Footnote example (c=2, a=0, d=3, b=1): "ca db ba dc" -> "cadbadc".
    const std::vector<Sequence> parts{make({2, 0}), make({3, 1}), make({1, 0}),
                                      make({3, 2})};
    const auto r = concat_squash(parts);
    CHECK(r.seq == make({2, 0, 3, 1, 0, 3, 2}));
    CHECK(r.removed == 1);

    const std::vector<Sequence> clean{make({1, 2}), make({3, 4})};
    const auto r2 = concat_squash(clean);
    CHECK(r2.seq == make({1, 2, 3, 4}));
    CHECK(r2.removed == 0);

    const std::vector<Sequence> chain{make({1}), make({1}), make({1})};
    const auto r3 = concat_squash(chain);
    CHECK(r3.seq == make({1}));
    CHECK(r3.removed == 2);
}

TEST_CASE("is_repetition_free") {
    CHECK(is_repetition_free(make({1, 2, 1})));
    CHECK_FALSE(is_repetition_free(make({1, 1, 2, 3})));
    CHECK(is_repetition_free(Sequence{}));
}

TEST_CASE("max_alternation_pair") {
    const Sequence s1 = make({2, 0, 3, 1, 0, 3, 2});  // "cadbadc"
    CHECK(max_alternation_pair(s1, 0, 3) == 4);       // a d a d
    CHECK(max_alternation_pair(make({1, 2, 1, 2}), 1, 2) == 4);
    CHECK(max_alternation_pair(make({1, 1, 2, 2}), 1, 2) == 2);
    CHECK_THROWS_AS(max_alternation_pair(s1, 1, 1), std::invalid_argument);
}

TEST_CASE("alternation_report") {
    const auto rs23 = make({1, 2, 1, 3, 1});
    CHECK(alternation_report(rs23).order == 2);

    const auto s1 = make({2, 0, 3, 1, 0, 3, 2});
    const auto rep = alternation_report(s1);
    CHECK(rep.order == 3);
    CHECK(rep.max_alternation == 4);

    const auto single = alternation_report(make({1}));
    CHECK(single.max_alternation == 0);
    CHECK(single.order == 0);
    CHECK(alternation_report(Sequence{}).order == 0);
}

TEST_CASE("sampled report is a lower bound on the exhaustive one") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        const Sequence s = random_sequence(rng, 40, 8);
        const auto full = alternation_report(s);
        const auto sampled = alternation_report_sampled(s, 30, it);
        CHECK_FALSE(sampled.exhaustive);
        CHECK(sampled.max_alternation <= full.max_alternation);
    }
    // Enough samples recover the exact value on a small alphabet.
    const Sequence s = make({1, 2, 1, 3, 1, 2, 3, 2});
    CHECK(alternation_report_sampled(s, 2000, 1).max_alternation ==
          alternation_report(s).max_alternation);
}

TEST_CASE("alternation invariances") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const Sequence s = random_sequence(rng, 20, 5);
        const auto rep = alternation_report(s);
        CHECK(alternation_report(reversed(s)).max_alternation == rep.max_alternation);
        if (s.alphabet_size() >= 2) {
            // Bijective relabeling onto shifted ids.
            const auto order = first_occurrence_order(s);
            std::vector<Symbol> target;
            for (Symbol x : order) target.push_back(x + 100);
            CHECK(alternation_report(relabel(s, target)).max_alternation ==
                  rep.max_alternation);
            CHECK(max_alternation_pair(s, order[0], order[1]) ==
                  max_alternation_pair(s, order[1], order[0]));
        }
    }
}

TEST_CASE("squash properties on random parts") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        std::vector<Sequence> parts;
        std::uint64_t total = 0;
        std::uniform_int_distribution<int> nparts(1, 4);
        const int np = nparts(rng);
        for (int i = 0; i < np; ++i) {
            parts.push_back(random_sequence(rng, 10, 3));
            total += parts.back().size();
        }
        const auto r = concat_squash(parts);
        CHECK(is_repetition_free(r.seq));
        CHECK(r.seq.size() + r.removed == total);
    }
}

TEST_CASE("max_alternation_pair agrees with the all-subsequences oracle") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        const Sequence s = random_sequence(rng, 12, 4);
        for (Symbol a = 0; a < 4; ++a)
            for (Symbol b = a + 1; b < 4; ++b)
                CHECK(max_alternation_pair(s, a, b) ==
                      dsz::testing::brute_force_alternation(s, a, b));
    }
}

TEST_CASE("length bound") {
    CHECK(length_upper_bound(3, 2) == 7);
    CHECK(length_upper_bound(1, 5) == 1);
    const auto rs23 = make({1, 2, 1, 3, 1});
    CHECK(satisfies_length_bound(rs23, 2));
    CHECK_FALSE(satisfies_length_bound(make({1, 2, 1, 2, 1, 2, 1, 2}), 1));
}

TEST_CASE("text and json round trip") {
    const Sequence s = make({1, 2, 1, 3, 1});
    CHECK(to_text(s) == "1 2 1 3 1");
    CHECK(from_text("1 2 1 3 1") == s);
    CHECK(from_text("") == Sequence{});
    CHECK_THROWS_AS(from_text("1 x 2"), std::invalid_argument);
    CHECK_THROWS_AS(from_text("-3"), std::invalid_argument);
    CHECK(from_json(to_json(s)) == s);
}
