#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma_forms/exact.hpp"

using namespace gamma_forms;

TEST_CASE("lcm_upto: small values and rejection") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(4) == 12);
    CHECK(lcm_upto(10) == 2520);
    CHECK_THROWS_AS(lcm_upto(0), std::invalid_argument);
}

TEST_CASE("lcm_upto: d_2n divisible by every j <= 2n") {
    for (unsigned n = 1; n <= 30; ++n) {
        const BigInt d = lcm_upto(2 * n);
        for (unsigned j = 1; j <= 2 * n; ++j) {
            CAPTURE(n);
            CAPTURE(j);
            CHECK(d % j == 0);
        }
    }
}

TEST_CASE("harmonic: values and telescoping") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(2) == BigRational(3, 2));
    CHECK(harmonic(4) == BigRational(25, 12));
    for (unsigned N = 1; N <= 100; ++N) {
        CHECK(harmonic(N) - harmonic(N - 1) == BigRational(1, N));
    }
}

TEST_CASE("binomial: values, rejection, square-sum identity") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(30, 15) == 155117520);
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
    for (unsigned n = 0; n <= 30; ++n) {
        BigInt sum = 0;
        for (unsigned k = 0; k <= n; ++k) {
            const BigInt c = binomial(n, k);
            sum += c * c;
        }
        CHECK(sum == binomial(2 * n, n));
    }
}

TEST_CASE("s_n_factored: explicit small cases") {
    const FactoredInteger s1 = s_n_factored(1);
    REQUIRE(s1.factors.size() == 1);
    CHECK(s1.factors[0].first == 2);
    CHECK(s1.factors[0].second == 4);

    const FactoredInteger s2 = s_n_factored(2);
    REQUIRE(s2.factors.size() == 2);
    CHECK(s2.factors[0].first == 3);
    CHECK(s2.factors[0].second == 36);
    CHECK(s2.factors[1].first == 4);
    CHECK(s2.factors[1].second == 36);

    CHECK_THROWS_AS(s_n_factored(0), std::invalid_argument);
}

TEST_CASE("s_n_factored: exponents stay non-negative integers up to n = 25") {
    for (unsigned n = 1; n <= 25; ++n) {
        const FactoredInteger s = s_n_factored(n);
        REQUIRE(s.factors.size() == n);
        BigInt prev_base = 0;
        for (const auto& [base, exponent] : s.factors) {
            CHECK(base > prev_base);
            CHECK(exponent >= 0);
            prev_base = base;
        }
    }
}

TEST_CASE("FactoredInteger: validation and the empty product") {
    FactoredInteger one;
    CHECK(one.is_one());
    one.validate();

    FactoredInteger bad;
    bad.factors.emplace_back(3, 1);
    bad.factors.emplace_back(2, 1);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
