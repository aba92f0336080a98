#include <doctest.h>

#include <functional>

#include "qzeta/bernoulli.hpp"
#include "qzeta/qzv.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

TEST_CASE("eulerian numerators") {
    CHECK(eulerian_numerator(1) == PolynomialQ::monomial(1, 1));               // t
    CHECK(eulerian_numerator(2) == PolynomialQ::monomial(1, 1));               // t
    CHECK(eulerian_numerator(3) == PolynomialQ({0, 1, 1}));                    // t + t^2
    CHECK_THROWS_AS((void)eulerian_numerator(0), std::invalid_argument);

    SUBCASE("generating identity holds well beyond the defining window") {
        // R(t)/(1-t)^s = sum d^{s-1} t^d, checked to degree 2s by expanding
        // R(t) * (1-t)^{-s} with binomial coefficients
        for (int s = 1; s <= 8; ++s) {
            PolynomialQ r = eulerian_numerator(s);
            const std::size_t deg = static_cast<std::size_t>(2 * s);
            std::vector<Rational> expansion(deg + 1);
            for (std::size_t k = 0; k <= deg; ++k) {
                // coefficient of t^k in (1-t)^{-s} is C(k+s-1, s-1)
                Rational geo(binomial(k + s - 1, s - 1));
                for (std::size_t j = 0; j + k <= deg; ++j) expansion[j + k] += r.coeff(j) * geo;
            }
            for (std::size_t d = 1; d <= deg; ++d)
                CHECK(expansion[d] == Rational(int_pow(static_cast<long>(d), s - 1)));
        }
    }
}

TEST_CASE("Q polynomial families") {
    CHECK(q_poly(QFamily::Okounkov, 4) == PolynomialQ::monomial(2, 1));   // t^2
    CHECK(q_poly(QFamily::Okounkov, 3) == PolynomialQ({0, 1, 1}));        // t + t^2
    CHECK(q_poly(QFamily::Eulerian, 3) == PolynomialQ({0, rat(1, 2), rat(1, 2)}));
    CHECK_THROWS_AS((void)q_poly(QFamily::Okounkov, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)q_poly(QFamily::Eulerian, 0), std::invalid_argument);
}

TEST_CASE("generic nested sum") {
    auto eulerian = [](int s) { return q_poly(QFamily::Eulerian, s); };
    auto okounkov = [](int s) { return q_poly(QFamily::Okounkov, s); };

    CHECK(equal_to_order(z_generic(okounkov, {}, 6), PowerSeries::one(6), 6));

    PowerSeries z2 = z_generic(okounkov, {2}, 4);
    CHECK(equal_to_order(z2, oracles::sigma_series(1, 4), 4));

    PowerSeries b22 = z_generic(eulerian, {2, 2}, 4);
    CHECK(equal_to_order(b22, oracles::bracket2_sum(2, 2, 4), 4));
    CHECK(b22.coeff(3) == 1);
    CHECK(b22.coeff(4) == 3);

    SUBCASE("a family with nonzero constant term is rejected") {
        auto bad = [](int) { return PolynomialQ({1, 1}); };
        CHECK_THROWS_AS((void)z_generic(bad, {2}, 4), std::domain_error);
    }
}

TEST_CASE("brackets against divisor-sum oracles") {
    PowerSeries b1 = bracket({1}, 4);
    for (std::size_t k = 1; k <= 4; ++k)
        CHECK(b1.coeff(k) == Rational(oracles::divisor_count(static_cast<long>(k))));

    CHECK(equal_to_order(bracket({2}, 4), oracles::sigma_series(1, 4), 4));

    PowerSeries b3 = bracket({3}, 3);
    PowerSeries half_sigma2 = rat(1, 2) * oracles::sigma_series(2, 3);
    CHECK(equal_to_order(b3, half_sigma2, 3));

    CHECK_THROWS_AS((void)bracket({0, 2}, 4), std::invalid_argument);
}

TEST_CASE("bracket dual paths agree for every composition of weight <= 6") {
    for (int w = 1; w <= 6; ++w) {
        // enumerate compositions of w
        std::vector<Composition> comps;
        std::function<void(Composition&, int)> rec = [&](Composition& c, int rem) {
            if (rem == 0) {
                comps.push_back(c);
                return;
            }
            for (int s = 1; s <= rem; ++s) {
                c.push_back(s);
                rec(c, rem - s);
                c.pop_back();
            }
        };
        Composition c;
        rec(c, w);
        for (const Composition& comp : comps) {
            PowerSeries a = z_generic([](int s) { return q_poly(QFamily::Eulerian, s); }, comp, 20);
            PowerSeries b = bracket_multi_index(comp, 20);
            CHECK(equal_to_order(a, b, 20));
        }
    }
}

TEST_CASE("Okounkov series") {
    PowerSeries z4 = okounkov_z({4}, 5);
    PowerSeries expected = oracles::lambert_sum(
        [](long d) { return rat(d * d * d - d, 6); }, 5);
    CHECK(equal_to_order(z4, expected, 5));
    CHECK(z4.coeff(2) == 1);
    CHECK(z4.coeff(3) == 4);
    CHECK(z4.coeff(4) == 11);
    CHECK(z4.coeff(5) == 20);

    PowerSeries z3 = okounkov_z({3}, 4);
    CHECK(equal_to_order(z3, oracles::sigma_series(2, 4), 4));
    CHECK(equal_to_order(z3, Rational(2) * bracket({3}, 4), 4));

    CHECK_THROWS_AS((void)okounkov_z({2, 1}, 4), std::invalid_argument);
}

TEST_CASE("Z(2) equals the second bracket at order 40") {
    CHECK(equal_to_order(okounkov_z({2}, 40), bracket({2}, 40), 40));
}

TEST_CASE("Bernoulli numbers") {
    auto b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == rat(-1, 2));
    CHECK(b[2] == rat(1, 6));
    CHECK(b[4] == rat(-1, 30));
    CHECK(b[6] == rat(1, 42));
    CHECK(b[12] == rat(-691, 2730));
    for (std::size_t i = 3; i <= 11; i += 2) CHECK(b[i] == 0);
}

TEST_CASE("Eisenstein series values") {
    PowerSeries g2 = eisenstein(2, 10);
    CHECK(g2.coeff(0) == rat(-1, 24));
    CHECK(equal_to_order(g2, PowerSeries::constant(rat(-1, 24), 10) + oracles::sigma_series(1, 10),
                         10));
    CHECK(eisenstein(4, 2).coeff(0) == rat(1, 1440));
    CHECK(eisenstein(6, 2).coeff(0) == rat(-1, 60480));
    CHECK_THROWS_AS((void)eisenstein(3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)eisenstein(0, 4), std::invalid_argument);
}

TEST_CASE("q-zeta combinations") {
    QZetaCombination one(Rational(1));
    CHECK(equal_to_order(one.eval(4), PowerSeries::one(4), 4));

    QZetaCombination c;
    c.add_term({2}, rat(1, 2));
    c.add_term({3}, rat(-1, 2));
    PowerSeries v = c.eval(3);
    CHECK(v.coeff(1) == 0);
    CHECK(v.coeff(2) == -1);
    CHECK(v.coeff(3) == -3);

    SUBCASE("Z(2,2) equals (Z(2)^2 - Z(4)) / 2 at order 6") {
        PowerSeries z22 = okounkov_z({2, 2}, 6);
        PowerSeries z2 = okounkov_z({2}, 6);
        PowerSeries rhs = rat(1, 2) * (z2 * z2) - rat(1, 2) * okounkov_z({4}, 6);
        CHECK(equal_to_order(z22, rhs, 6));
    }

    SUBCASE("the composition constraint is enforced") {
        QZetaCombination bad;
        CHECK_THROWS_AS(bad.add_term({1, 2}, 1), std::invalid_argument);
    }

    SUBCASE("z2_squared expands to the square of Z(2)") {
        PowerSeries z2 = okounkov_z({2}, 8);
        CHECK(equal_to_order(QZetaCombination::z2_squared().eval(8), z2 * z2, 8));
    }
}
