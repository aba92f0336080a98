#include <doctest.h>

#include <random>

#include "qzeta/hilbert.hpp"
#include "qzeta/quasimodular.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

TEST_CASE("monomial basis enumeration") {
    auto b0 = qm_basis(0, 2);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].first == QMMonomial{0, 0, 0});
    CHECK(equal_to_order(b0[0].second, PowerSeries::one(2), 2));

    auto b4 = qm_basis(4, 2);
    REQUIRE(b4.size() == 4);
    CHECK(b4[0].first == QMMonomial{0, 0, 0});
    CHECK(b4[1].first == QMMonomial{1, 0, 0});
    CHECK(b4[2].first == QMMonomial{0, 1, 0});
    CHECK(b4[3].first == QMMonomial{2, 0, 0});

    CHECK(qm_basis(6, 2).size() == 7);
    CHECK(qm_basis(8, 2).size() == 11);
}

TEST_CASE("expression arithmetic and weight") {
    QMExpression e;
    e.add_term({1, 0, 0}, rat(1, 3));
    e.add_term({0, 1, 0}, rat(-1, 12));
    CHECK(e.weight() == 4);
    e.add_term({1, 0, 0}, rat(-1, 3));
    CHECK(e.coeff({1, 0, 0}) == 0);
    CHECK(e.terms().size() == 1);

    QMExpression z2;
    z2.add_term({1, 0, 0}, 1);
    QMExpression prod = z2 * z2;
    CHECK(prod.coeff({2, 0, 0}) == 1);
    CHECK(prod.weight() == 4);

    PowerSeries direct = okounkov_z({2}, 10) * okounkov_z({2}, 10);
    CHECK(equal_to_order(prod.eval(10), direct, 10));
}

TEST_CASE("recognizing the theta series") {
    PowerSeries th = theta2(30);
    RecognitionResult res = qm_recognize(th, 4, 4, 20);
    REQUIRE(res.status == RecognitionResult::Status::Ok);
    CHECK(res.expression->coeff({2, 0, 0}) == rat(1, 3));
    CHECK(res.expression->coeff({0, 1, 0}) == rat(-1, 12));
    CHECK(res.expression->coeff({1, 0, 0}) == 0);
    CHECK(res.expression->coeff({0, 0, 0}) == 0);
}

TEST_CASE("recognizing the zero series") {
    RecognitionResult res = qm_recognize(PowerSeries(30), 4, 4, 20);
    REQUIRE(res.status == RecognitionResult::Status::Ok);
    CHECK(res.expression->is_zero());
}

TEST_CASE("rejecting a series outside the ring") {
    RecognitionResult res = qm_recognize(okounkov_z({3}, 30), 4, 4, 20);
    REQUIRE(res.status == RecognitionResult::Status::Mismatch);
    CHECK(res.mismatch_index == 4);
}

TEST_CASE("a rank-deficient basis reports ambiguity") {
    PowerSeries z2 = okounkov_z({2}, 12);
    std::vector<std::pair<QMMonomial, PowerSeries>> basis;
    basis.emplace_back(QMMonomial{1, 0, 0}, z2);
    basis.emplace_back(QMMonomial{0, 1, 0}, Rational(2) * z2);
    RecognitionResult res = qm_recognize_with_basis(z2, basis, 4, 4);
    CHECK(res.status == RecognitionResult::Status::Ambiguous);
}

TEST_CASE("fit window preconditions") {
    PowerSeries z2 = okounkov_z({2}, 10);
    CHECK_THROWS_AS((void)qm_recognize(z2, 4, 2, 2), std::invalid_argument);   // fit < basis
    CHECK_THROWS_AS((void)qm_recognize(z2, 4, 4, 20), std::invalid_argument);  // order too small
}

TEST_CASE("round trip on random expressions") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto monomials = qm_basis(8, 0);
    const std::size_t fit = monomials.size();
    for (int trial = 0; trial < 12; ++trial) {
        QMExpression expr;
        for (const auto& [m, unused] : monomials)
            if (num(rng) <= 2) expr.add_term(m, rat(num(rng), den(rng)));
        PowerSeries f = expr.eval(fit + 20);
        RecognitionResult res = qm_recognize(f, 8, fit, 20);
        REQUIRE(res.status == RecognitionResult::Status::Ok);
        CHECK(*res.expression == expr);
    }
}
