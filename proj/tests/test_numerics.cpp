#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gamma_forms/numerics.hpp"
#include "oracles.hpp"

using namespace gamma_forms;

namespace {

BigRational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = 1 + static_cast<long>(rng() % 97);
    return BigRational(num, den);
}

}  // namespace

TEST_CASE("Real: decimal strings round-trip bit-exactly") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Real x = Real::of_rational(random_rational(rng) + BigRational(1, 3), 192);
        Real back = Real::from_string(x.to_string(), 192);
        CHECK(mpfr_equal_p(x.raw(), back.raw()));
    }
    CHECK(Real::of_long(0, 64).to_string() == "0");
}

TEST_CASE("HPValue: ball arithmetic encloses exact rational arithmetic") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const BigRational a = random_rational(rng);
        const BigRational b = random_rational(rng);
        const HPValue xa = HPValue::from_rational(a, 96);
        const HPValue xb = HPValue::from_rational(b, 96);
        CHECK((xa + xb).contains_rational(a + b));
        CHECK((xa - xb).contains_rational(a - b));
        CHECK((xa * xb).contains_rational(a * b));
        if (b != 0) {
            CHECK((xa / xb).contains_rational(a / b));
        }
        CHECK(xa.mul_q(b).contains_rational(a * b));
        CHECK(xa.pow_ui(3).contains_rational(a * a * a));
    }
}

TEST_CASE("HPValue: division by an interval containing zero fails") {
    const HPValue one = HPValue::from_long(1, 64);
    const HPValue tiny = HPValue(Real::of_double(1e-30, 64), Real::of_double(1e-29, 64), Rigor::rigorous);
    CHECK_THROWS_AS(one / tiny, NumericFailure);
}

TEST_CASE("HPValue: log identities hold inside the enclosures") {
    const HPValue four = HPValue::from_long(4, 128);
    const HPValue two = HPValue::from_long(2, 128);
    const HPValue l4 = HPValue::log(four);
    const HPValue l2x2 = HPValue::log(two).mul_ui(2);
    CHECK(l4.overlaps(l2x2));
    CHECK(HPValue::separation(l4, l2x2).is_zero());

    // log1p(x) == log(1+x)
    const HPValue x = HPValue::from_rational(BigRational(-3, 7), 128);
    CHECK(HPValue::log1p(x).overlaps(HPValue::log(x.add_ui(1))));

    CHECK_THROWS_AS(HPValue::log(HPValue::from_long(-1, 64)), NumericFailure);
}

TEST_CASE("HPValue: exp/log round-trip containment") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const BigRational q = BigRational(1 + rng() % 50, 1 + rng() % 9);
        const HPValue x = HPValue::from_rational(q, 128);
        const HPValue roundtrip = HPValue::exp(HPValue::log(x));
        CHECK(roundtrip.contains_rational(q));
    }
}

TEST_CASE("HPValue: certified floor split") {
    const HPValue ok = HPValue(Real::of_double(2.5, 64), Real::of_double(0.1, 64), Rigor::rigorous);
    auto split = ok.certified_floor_split();
    REQUIRE(split.has_value());
    CHECK(split->floor == 2);
    CHECK(split->frac.value().to_double() == doctest::Approx(0.5));

    const HPValue straddling = HPValue(Real::of_double(3.0, 64), Real::of_double(0.2, 64), Rigor::rigorous);
    CHECK_FALSE(straddling.certified_floor_split().has_value());

    const HPValue negative = HPValue(Real::of_double(-0.25, 64), Real::of_double(0.01, 64), Rigor::rigorous);
    auto nsplit = negative.certified_floor_split();
    REQUIRE(nsplit.has_value());
    CHECK(nsplit->floor == -1);
}

TEST_CASE("HPValue: separation and inflation semantics") {
    const HPValue a = HPValue(Real::of_double(1.0, 64), Real::of_double(0.1, 64), Rigor::rigorous);
    const HPValue b = HPValue(Real::of_double(1.5, 64), Real::of_double(0.1, 64), Rigor::heuristic);
    CHECK(HPValue::separation(a, b).to_double() == doctest::Approx(0.3).epsilon(1e-12));
    // Inflating the heuristic radius by 10 makes the balls overlap.
    CHECK(HPValue::separation_inflated(a, b, 10.0).is_zero());
    CHECK_FALSE(a.overlaps(b));
    CHECK((a.rigor() == Rigor::rigorous));
    CHECK((b.inflated(10.0).rigor() == Rigor::heuristic));
    CHECK(((a * b).rigor() == Rigor::heuristic));
}

TEST_CASE("HPValue: value strings round-trip at the value's precision") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const HPValue x = HPValue::from_rational(random_rational(rng) + BigRational(1, 7), 160);
        Real back = Real::from_string(x.value_string(), x.prec());
        CHECK(mpfr_equal_p(x.value().raw(), back.raw()));
    }
}

TEST_CASE("gamma_reference: table values, capacity, rejection") {
    const HPValue g = gamma_reference(64);
    CHECK(g.value_string().substr(0, 17) == "5.772156649015328");
    CHECK(g.radius() < Real::pow2(-64, 64));
    CHECK((g.rigor() == Rigor::rigorous));

    CHECK(gamma_reference_capacity() > 1200);
    CHECK_THROWS_AS(gamma_reference(gamma_reference_capacity() + 64), std::invalid_argument);

    // Truncated requests stay consistent with higher-precision ones.
    CHECK(gamma_reference(64).overlaps(gamma_reference(512)));
}

TEST_CASE("gamma_reference: digits verified by the Euler-Maclaurin oracle to 200+ places") {
    // Two independent parameter choices; both enclose gamma rigorously.
    const HPValue oracle1 = oracles::em_gamma(100000, 30, 900);
    const HPValue oracle2 = oracles::em_gamma(60000, 32, 900);
    CHECK(oracle1.radius() < Real::of_double(1e-210, 64));
    CHECK(oracle2.radius() < Real::of_double(1e-210, 64));
    CHECK(oracle1.overlaps(oracle2));

    const HPValue table = gamma_reference(800);
    CHECK(table.overlaps(oracle1));
    CHECK(table.overlaps(oracle2));

    // Agreement to at least 200 decimal places.
    Real diff(64);
    mpfr_sub(diff.raw(), table.value().raw(), oracle1.value().raw(), MPFR_RNDA);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDU);
    CHECK(diff < Real::of_double(1e-200, 64));
}

TEST_CASE("log_factored: values and the empty product") {
    FactoredInteger f;
    f.factors.emplace_back(2, 4);
    const HPValue l = log_factored(f, 128);
    // 4 log 2 = 2.7725887222...
    CHECK(l.value().to_double() == doctest::Approx(2.77258872223978).epsilon(1e-13));

    FactoredInteger s2;
    s2.factors.emplace_back(3, 36);
    s2.factors.emplace_back(4, 36);
    const HPValue l2 = log_factored(s2, 128);
    CHECK(l2.value().to_double() == doctest::Approx(89.4566393923680).epsilon(1e-12));
    // equals 36 log 12
    const HPValue alt = HPValue::log(HPValue::from_long(12, 160)).mul_ui(36);
    CHECK(l2.overlaps(alt));

    CHECK(log_factored(FactoredInteger{}, 128).value().is_zero());
}

TEST_CASE("log_factored: radius scales with factor count and halves with precision") {
    FactoredInteger many;
    for (int b = 2; b <= 33; ++b) {
        many.factors.emplace_back(b, 1000);
    }
    // Per-factor cost is one log ulp plus one summation ulp at the running
    // magnitude (~2^17 here), so 32 factors stay within 2^64 ulps of the
    // working precision (256+32 bits).
    const Real r32 = log_factored(many, 256).radius();
    CHECK(r32 < Real::pow2(-288 + 64, 64));
    CHECK(r32.sign() > 0);

    const Real lo = log_factored(many, 512).radius();
    Real half(64);
    mpfr_div_2ui(half.raw(), r32.raw(), 1, MPFR_RNDD);
    CHECK(lo < half);
}

TEST_CASE("HPValue: deterministic summation") {
    std::mt19937_64 rng(3);
    std::vector<HPValue> xs;
    for (int i = 0; i < 64; ++i) {
        xs.push_back(HPValue::from_rational(random_rational(rng), 128));
    }
    const HPValue s1 = HPValue::sum(xs, 160);
    const HPValue s2 = HPValue::sum(xs, 160);
    CHECK(mpfr_equal_p(s1.value().raw(), s2.value().raw()));
    CHECK(mpfr_equal_p(s1.radius().raw(), s2.radius().raw()));
}
