#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "dsz/gf.hpp"

using dsz::gf::Elem;
using dsz::gf::Field;
using dsz::gf::field_new;

namespace {

const std::vector<std::uint32_t> kPrimePowersTo64 = {2,  3,  4,  5,  7,  8,  9, 11, 13,
                                                     16, 25, 27, 32, 49, 64};

Field make_field(std::uint32_t q) {
    const auto [p, k] = dsz::gf::prime_power(q);
    return Field(p, k);
}

}  // namespace

TEST_CASE("field construction") {
    CHECK(field_new(3, 1).q() == 3);

    const Field f4 = field_new(2, 2);
    CHECK(f4.q() == 4);
    // x^2 + x + 1 is the only irreducible monic quadratic over GF(2).
    CHECK(f4.reduction() == std::vector<std::uint32_t>{1, 1, 1});

    CHECK_THROWS_AS(field_new(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_new(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_new(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_new(2, 17), std::invalid_argument);  // q over cap
}

TEST_CASE("prime field arithmetic") {
    const Field f = field_new(3, 1);
    CHECK(f.add(2, 2) == 1);
    CHECK(f.mul(2, 2) == 1);
    CHECK(f.inv(2) == 2);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("GF(4) multiplication reduces by the modulus") {
    const Field f = field_new(2, 2);
    // x has index 2, x+1 has index 3; x * x = x + 1 mod (x^2 + x + 1).
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.coeffs(2) == std::vector<std::uint32_t>{0, 1});
    CHECK(f.from_coeffs(std::vector<std::uint32_t>{1, 1}) == 3);
}

TEST_CASE("poly_eval") {
    const Field f5 = field_new(5, 1);
    const std::vector<Elem> c{2, 3};
    CHECK(f5.poly_eval(c, 4) == 4);  // 2 + 3*4 mod 5
    CHECK(f5.poly_eval(std::vector<Elem>{3}, 2) == 3);
    const Field f2 = field_new(2, 1);
    CHECK(f2.poly_eval(std::vector<Elem>{1, 1, 1}, 1) == 1);
    CHECK_THROWS_AS(f5.poly_eval(std::vector<Elem>{}, 0), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (std::uint32_t q : kPrimePowersTo64) {
        const Field f = make_field(q);
        REQUIRE(f.q() == q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("element enumeration is a consistent bijection") {
    for (std::uint32_t q : {4u, 8u, 9u, 27u}) {
        const Field f = make_field(q);
        for (Elem a = 0; a < q; ++a)
            CHECK(f.from_coeffs(f.coeffs(a)) == a);
        CHECK(f.coeffs(0) == std::vector<std::uint32_t>(f.k(), 0));
        auto one = std::vector<std::uint32_t>(f.k(), 0);
        one[0] = 1;
        CHECK(f.coeffs(1) == one);
    }
}

TEST_CASE("nonzero degree-(t-1) polynomials have at most t-1 roots") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const Field f = make_field(q);
        for (std::uint32_t t = 1; t <= 3; ++t) {
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < t; ++i) total *= q;
            for (std::uint64_t enc = 1; enc < total; ++enc) {  // skip the zero vector
                std::vector<Elem> c(t);
                std::uint64_t rem = enc;
                for (std::uint32_t i = 0; i < t; ++i) {
                    c[i] = static_cast<Elem>(rem % q);
                    rem /= q;
                }
                std::uint32_t roots = 0;
                for (Elem x = 0; x < q; ++x)
                    if (f.poly_eval(c, x) == 0) ++roots;
                CHECK(roots <= t - 1);
            }
        }
    }
}
