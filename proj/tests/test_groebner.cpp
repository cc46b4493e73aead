#include <algorithm>
#include <random>

#include <catch2/catch.hpp>

#include "test_util.hpp"

using namespace toriglue;

namespace {

BinomialIdeal ideal_of(RingContext ring, std::vector<std::vector<Exp>> vectors) {
    BinomialIdeal ideal(std::move(ring));
    for (auto& v : vectors) ideal.add(binomial_from_vector(v));
    return ideal;
}

}  // namespace

TEST_CASE("normal form: basis elements reduce to zero") {
    auto ideal = ideal_of(standard_ring(5), {{1, 0, -1, 1, -1}, {-2, 2, 0, 1, -1}});
    auto gb = groebner_basis(ideal);
    for (const auto& g : gb.elements) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("normal form: irreducible binomials pass through") {
    auto ideal = ideal_of(standard_ring(5), {{1, 0, -1, 1, -1}});  // x1x4 - x3x5
    auto gb = groebner_basis(ideal);
    Binomial probe = binomial_from_vector({1, -1, 0, 0, 0});  // x1 - x2
    CHECK(normal_form(probe, gb) == probe.oriented(gb.ring.monomial_order()));
}

TEST_CASE("normal form: zero input stays zero, ring mismatch throws") {
    auto ideal = ideal_of(standard_ring(3), {{1, -1, 0}});
    auto gb = groebner_basis(ideal);
    CHECK(normal_form(Binomial::zero(3), gb).is_zero());
    CHECK_THROWS_AS(normal_form(Binomial::zero(4), gb), std::invalid_argument);
}

TEST_CASE("buchberger: principal ideal is its own reduced basis") {
    auto ideal = ideal_of(standard_ring(4), {{2, -1, -1, 0}});
    auto gb = groebner_basis(ideal);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == binomial_from_vector({2, -1, -1, 0}));
}

TEST_CASE("buchberger: linear chain under lex") {
    RingContext ring = standard_ring(3, "x", OrderKind::lex);
    auto ideal = ideal_of(ring, {{1, -1, 0}, {0, 1, -1}});
    auto gb = groebner_basis(ideal);
    // hand reduction: S(x1-x2, x2-x3) -> x1-x3, then x1-x2 reduces away
    REQUIRE(gb.elements.size() == 2);
    CHECK(gb.elements[0] == binomial_from_vector({1, 0, -1}));
    CHECK(gb.elements[1] == binomial_from_vector({0, 1, -1}));
}

TEST_CASE("buchberger: deterministic regardless of generator order") {
    RingContext ring = standard_ring(5);
    std::vector<std::vector<Exp>> vecs{{1, 0, -1, 1, -1}, {-2, 2, 0, 1, -1}, {3, -2, -1, 0, 0}};
    auto gb1 = groebner_basis(ideal_of(ring, vecs));
    std::reverse(vecs.begin(), vecs.end());
    auto gb2 = groebner_basis(ideal_of(ring, vecs));
    std::rotate(vecs.begin(), vecs.begin() + 1, vecs.end());
    auto gb3 = groebner_basis(ideal_of(ring, vecs));
    CHECK(gb1.elements == gb2.elements);
    CHECK(gb1.elements == gb3.elements);
}

TEST_CASE("buchberger: budget violations raise the distinct error") {
    IntMatrix m{{5, 12, 13, 16}};
    SECTION("reduction cap") {
        CHECK_THROWS_AS(toric_ideal(m, Budget{3, 60}), BudgetExceeded);
    }
    SECTION("degree cap") {
        CHECK_THROWS_AS(toric_ideal(m, Budget{50'000, 2}), BudgetExceeded);
    }
    SECTION("generous budget succeeds") {
        CHECK_FALSE(toric_ideal(m, Budget{50'000, 60}).generators.empty());
    }
}

TEST_CASE("reduced basis invariants: monic leads, no divisible terms") {
    std::mt19937 gen(21);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m = tgtest::random_homogeneous(gen);
        auto gb = groebner_basis(toric_ideal(m));
        const auto ord = gb.ring.monomial_order();
        for (std::size_t i = 0; i < gb.elements.size(); ++i) {
            CHECK(ord.greater(gb.elements[i].plus, gb.elements[i].minus));
            for (std::size_t j = 0; j < gb.elements.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(gb.elements[j].plus.divides(gb.elements[i].plus));
                CHECK_FALSE(gb.elements[j].plus.divides(gb.elements[i].minus));
            }
        }
    }
}

TEST_CASE("ideal equality: reflexive, and an equivalence on generated ideals") {
    RingContext ring = standard_ring(4);
    auto i1 = ideal_of(ring, {{1, -1, 0, 0}, {0, 1, -1, 0}});
    auto i2 = ideal_of(ring, {{0, 1, -1, 0}, {1, 0, -1, 0}});  // same ideal, other gens
    auto i3 = ideal_of(ring, {{1, 0, -1, 0}, {1, -1, 0, 0}});
    auto i4 = ideal_of(ring, {{1, -1, 0, 0}});
    CHECK(ideal_equals(i1, i1));
    CHECK(ideal_equals(i1, i2));
    CHECK(ideal_equals(i2, i1));
    CHECK(ideal_equals(i2, i3));
    CHECK(ideal_equals(i1, i3));  // transitivity instance
    CHECK_FALSE(ideal_equals(i1, i4));
}

TEST_CASE("ideal equality: ring mismatch is an error") {
    auto i1 = ideal_of(standard_ring(3), {{1, -1, 0}});
    auto i2 = ideal_of(standard_ring(3, "y"), {{1, -1, 0}});
    CHECK_THROWS_AS(ideal_equals(i1, i2), std::invalid_argument);
}

TEST_CASE("printing: caret-and-star format with stable ordering") {
    RingContext ring = standard_ring(5);
    auto ideal = ideal_of(ring, {{-2, 2, 0, 1, -1}, {1, 0, -1, 1, -1}});
    CHECK(to_string(ideal) == "x2^2*x4 - x1^2*x5\nx1*x4 - x3*x5\n");
    CHECK(to_string(Binomial::zero(5), ring) == "0");
    BinomialIdeal zero(ring);
    CHECK(to_string(zero) == "0\n");
}

TEST_CASE("printed bases change with the order, equality verdicts do not") {
    IntMatrix m{{2, 0, 6, 4, 0}, {3, 4, 1, 0, 2}, {2, 3, 0, 3, 5}};
    RingContext grev = standard_ring(5);
    RingContext lex = standard_ring(5, "x", OrderKind::lex);
    auto ideal_grev = toric_ideal(m, grev);
    auto ideal_lex = toric_ideal(m, lex);
    BinomialIdeal printed_grev(grev), printed_lex(lex);
    for (auto v : {std::vector<Exp>{1, 0, -1, 1, -1}, {-2, 2, 0, 1, -1}, {3, -2, -1, 0, 0}}) {
        printed_grev.add(binomial_from_vector(v));
        printed_lex.add(binomial_from_vector(v));
    }
    CHECK(ideal_equals(ideal_grev, printed_grev));
    CHECK(ideal_equals(ideal_lex, printed_lex));
}
