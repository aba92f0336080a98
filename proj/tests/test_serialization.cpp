#include <doctest.h>

#include <random>
#include <sstream>

#include "qzeta/series_io.hpp"
#include "qzeta/surface.hpp"

using namespace qzeta;

TEST_CASE("series JSON round trip is bit exact") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99991);
    for (int trial = 0; trial < 10; ++trial) {
        PowerSeries s(12);
        for (std::size_t k = 0; k <= 12; ++k) s.set_coeff(k, rat(num(rng), den(rng)));
        PowerSeries back = series_from_json(series_to_json(s));
        REQUIRE(back.order() == s.order());
        CHECK(equal_to_order(back, s, s.order()));
        // a second emission is byte-identical
        CHECK(series_to_json(back) == series_to_json(s));
    }
}

TEST_CASE("series CSV round trip is bit exact") {
    PowerSeries s(6);
    s.set_coeff(0, rat(-1, 24));
    s.set_coeff(3, rational_from_string("123456789123456789/987654321"));
    s.set_coeff(6, rat(7, 3));
    std::ostringstream out;
    series_to_csv(s, out);
    std::istringstream in(out.str());
    PowerSeries back = series_from_csv(in);
    REQUIRE(back.order() == s.order());
    CHECK(equal_to_order(back, s, 6));
}

TEST_CASE("expression JSON round trip and key order") {
    QMExpression e;
    e.add_term({0, 0, 0}, rat(1, 2));
    e.add_term({2, 0, 0}, rat(1, 3));
    e.add_term({0, 1, 0}, rat(-1, 12));
    std::string j = qm_expression_to_json(e);
    QMExpression back = qm_expression_from_json(j);
    CHECK(back == e);
    CHECK(qm_expression_to_json(back) == j);
    // graded-lex: the weight-4 monomials appear with (0,1,0) before (2,0,0)
    CHECK(j.find("[0,1,0]") < j.find("[2,0,0]"));
}

TEST_CASE("combination JSON round trip and graded ordering") {
    QZetaCombination c;
    c.add_constant(rat(-3, 7));
    c.add_term({2}, rat(1, 2));
    c.add_term({2, 2}, rat(-2, 3));
    c.add_term({4}, 5);
    c.add_term({3}, rat(1, 9));
    std::string j = qzeta_combination_to_json(c);
    QZetaCombination back = qzeta_combination_from_json(j);
    CHECK(back == c);
    CHECK(qzeta_combination_to_json(back) == j);
    // weight-graded order: (2) before (3) before the weight-4 keys, and
    // (2,2) lexicographically before (4) within weight 4
    CHECK(j.find("[2]") < j.find("[3]"));
    CHECK(j.find("[3]") < j.find("[2,2]"));
    CHECK(j.find("[2,2]") < j.find("[4]"));
}

TEST_CASE("composition weight") {
    CHECK(weight({}) == 0);
    CHECK(weight({2, 3, 2}) == 7);
}

TEST_CASE("coefficient text input") {
    PowerSeries a = coefficients_from_text("0 1\n1 -1/2\n3 7/8\n");
    CHECK(a.order() == 3);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == rat(-1, 2));
    CHECK(a.coeff(2) == 0);
    CHECK(a.coeff(3) == rat(7, 8));

    PowerSeries b = coefficients_from_text(R"(["1", "-1/2", "0", "7/8"])");
    CHECK(equal_to_order(a, b, 3));

    CHECK_THROWS_AS((void)coefficients_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS((void)coefficients_from_text("0 not-a-number"), std::invalid_argument);
}

TEST_CASE("surface JSON") {
    SurfacePairings p = SurfacePairings::from_json_string(
        R"({"chi": 3, "K2": 9, "KL": -3, "L2": 1})");
    CHECK(p.chi == 3);
    CHECK(p.K2 == 9);
    CHECK(p.KL == -3);
    CHECK(p.L2 == 1);
    // defaults to the fundamental-class pairings
    CHECK(p.pair_e == 3);
    CHECK(p.pair_K2 == 9);
    CHECK(p.pair_1 == 0);

    SurfacePairings q = SurfacePairings::from_json_string(
        R"({"chi": 0, "pairings": {"e": "1/2", "K": -2}})");
    CHECK(q.pair_e == rat(1, 2));
    CHECK(q.pair_K == -2);

    SurfacePairings round = SurfacePairings::from_json_string(p.to_json_string());
    CHECK(round.pair_e == p.pair_e);
    CHECK(round.K2 == p.K2);

    CHECK_THROWS_AS((void)SurfacePairings::from_json_string("{"), std::invalid_argument);
    CHECK_THROWS_AS((void)SurfacePairings::from_json_string(R"({"chi": "three"})"),
                    std::invalid_argument);
}
