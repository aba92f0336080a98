#include <doctest.h>

#include <random>

#include "qzeta/power_series.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

namespace {

PowerSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    PowerSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.set_coeff(k, rat(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("addition: cancellation and identity") {
    PowerSeries a(4), b(4);
    a.set_coeff(0, 1);
    a.set_coeff(1, 1);  // 1 + q
    b.set_coeff(0, 1);
    b.set_coeff(1, -1);  // 1 - q
    CHECK(equal_to_order(a + b, PowerSeries::constant(2, 4), 4));

    PowerSeries f = a;
    CHECK(equal_to_order(f + PowerSeries(4), f, 4));
}

TEST_CASE("addition of divisor-sum series doubles every coefficient") {
    const std::size_t N = 5;
    PowerSeries z2 = oracles::sigma_series(1, N);
    PowerSeries sum = z2 + z2;
    for (std::size_t k = 1; k <= N; ++k)
        CHECK(sum.coeff(k) == Rational(2) * Rational(oracles::divisor_power_sum(k, 1)));
}

TEST_CASE("multiplication basics") {
    const std::size_t N = 8;
    PowerSeries one_minus_q(N);
    one_minus_q.set_coeff(0, 1);
    one_minus_q.set_coeff(1, -1);
    PowerSeries geo(N);
    for (std::size_t k = 0; k <= N; ++k) geo.set_coeff(k, 1);
    CHECK(equal_to_order(one_minus_q * geo, PowerSeries::one(N), N));

    PowerSeries f = oracles::sigma_series(1, N);
    CHECK(equal_to_order(f * PowerSeries::one(N), f, N));
}

TEST_CASE("square of the sigma_1 series matches direct convolution") {
    const std::size_t N = 4;
    PowerSeries z2 = oracles::sigma_series(1, N);
    PowerSeries sq = z2 * z2;
    // q^2 + 6 q^3 + 17 q^4 by convolving sigma_1 = 1, 3, 4, 7
    CHECK(sq.coeff(0) == 0);
    CHECK(sq.coeff(1) == 0);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 6);
    CHECK(sq.coeff(4) == 17);
}

TEST_CASE("mixed order arithmetic truncates to the minimum") {
    PowerSeries a(10), b(4);
    a.set_coeff(7, 3);
    b.set_coeff(2, 1);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
}

TEST_CASE("inverse") {
    const std::size_t N = 10;
    PowerSeries one_minus_q(N);
    one_minus_q.set_coeff(0, 1);
    one_minus_q.set_coeff(1, -1);
    PowerSeries inv = inverse(one_minus_q);
    for (std::size_t k = 0; k <= N; ++k) CHECK(inv.coeff(k) == 1);

    CHECK(equal_to_order(inverse(PowerSeries::one(N)), PowerSeries::one(N), N));

    SUBCASE("non-unit input is rejected") {
        PowerSeries q_only(3);
        q_only.set_coeff(1, 1);
        CHECK_THROWS_AS((void)inverse(q_only), std::domain_error);
    }
}

TEST_CASE("inverse of the finite Euler product counts partitions") {
    const std::size_t N = 12;
    PowerSeries inv = inverse(euler_product(N));
    auto p = oracles::partition_counts(N);
    for (std::size_t k = 0; k <= N; ++k) CHECK(inv.coeff(k) == Rational(p[k]));
}

TEST_CASE("integer powers") {
    const std::size_t N = 6;
    PowerSeries one_plus_q(N);
    one_plus_q.set_coeff(0, 1);
    one_plus_q.set_coeff(1, 1);
    PowerSeries sq = int_pow(one_plus_q, 2);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 0);

    PowerSeries f = oracles::sigma_series(2, N);
    f.set_coeff(0, 5);
    CHECK(equal_to_order(int_pow(f, 0), PowerSeries::one(N), N));

    SUBCASE("negative power of a non-unit series is rejected") {
        PowerSeries q_only(3);
        q_only.set_coeff(1, 1);
        CHECK_THROWS_AS((void)int_pow(q_only, -2), std::domain_error);
    }
}

TEST_CASE("24th negative power of the Euler product") {
    const std::size_t N = 5;
    // brute force: 24 copies of each inverse factor (1 - q^i)^{-1}
    PowerSeries brute = PowerSeries::one(N);
    for (int copy = 0; copy < 24; ++copy)
        for (std::size_t i = 1; i <= N; ++i) {
            PowerSeries factor(N);
            factor.set_coeff(0, 1);
            factor.set_coeff(i, -1);
            brute = brute * inverse(factor);
        }
    PowerSeries direct = int_pow(euler_product(N), -24);
    CHECK(equal_to_order(direct, brute, N));
    CHECK(direct.coeff(1) == 24);
    CHECK(direct.coeff(2) == 324);
    CHECK(direct.coeff(3) == 3200);
    CHECK(direct.coeff(4) == 25650);
    CHECK(direct.coeff(5) == 176256);
}

TEST_CASE("finite Euler product matches the direct expansion") {
    CHECK(equal_to_order(euler_product(0), PowerSeries::one(0), 0));
    for (std::size_t N : {7u, 12u}) {
        PowerSeries p = euler_product(N);
        auto coeffs = oracles::euler_product_coeffs(N);
        for (std::size_t k = 0; k <= N; ++k) CHECK(p.coeff(k) == Rational(coeffs[k]));
    }
    // pentagonal pattern at N = 12: 1 - q - q^2 + q^5 + q^7 - q^12
    PowerSeries p = euler_product(12);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(5) == 1);
    CHECK(p.coeff(7) == 1);
    CHECK(p.coeff(12) == -1);
    for (std::size_t k : {3u, 4u, 6u, 8u, 9u, 10u, 11u}) CHECK(p.coeff(k) == 0);
}

TEST_CASE("q d/dq") {
    CHECK(q_derivative(PowerSeries::one(5)).is_zero());
    PowerSeries mono = PowerSeries::monomial(3, 1, 5);
    CHECK(equal_to_order(q_derivative(mono), PowerSeries::monomial(3, 3, 5), 5));

    PowerSeries z2 = oracles::sigma_series(1, 4);
    PowerSeries d = q_derivative(z2);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == 6);
    CHECK(d.coeff(3) == 12);
    CHECK(d.coeff(4) == 28);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(917);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> ord(1, 20);
        const std::size_t N = ord(rng);
        PowerSeries a = random_series(rng, N);
        PowerSeries b = random_series(rng, N);
        PowerSeries c = random_series(rng, N);
        CHECK(equal_to_order(a * b, b * a, N));
        CHECK(equal_to_order((a * b) * c, a * (b * c), N));
        CHECK(equal_to_order(a * (b + c), a * b + a * c, N));
        // Leibniz rule
        CHECK(equal_to_order(q_derivative(a * b), q_derivative(a) * b + a * q_derivative(b), N));
    }
}

TEST_CASE("inversion is a two-sided inverse for random unit series") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        PowerSeries a = random_series(rng, 16);
        if (a.coeff(0) == 0) a.set_coeff(0, 1);
        CHECK(equal_to_order(a * inverse(a), PowerSeries::one(16), 16));
    }
}

TEST_CASE("euler product times the partition series is one") {
    const std::size_t N = 20;
    auto p = oracles::partition_counts(N);
    PowerSeries partition_series(N);
    for (std::size_t k = 0; k <= N; ++k) partition_series.set_coeff(k, Rational(p[k]));
    CHECK(equal_to_order(euler_product(N) * partition_series, PowerSeries::one(N), N));
}

TEST_CASE("comparison order must not exceed the series order") {
    PowerSeries a(3), b(5);
    CHECK_THROWS_AS((void)equal_to_order(a, b, 5), std::invalid_argument);
}
