#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gamma_forms/identities.hpp"
#include "gamma_forms/numerics.hpp"
#include "gamma_forms/representations.hpp"
#include "oracles.hpp"

using namespace gamma_forms;

namespace {

// Independent spot oracle: B*gamma + sum c_m log(n+m) - A straight from the
// digit table and mpfr logs.
HPValue linear_form_value(const LinearForm& lf, mpfr_prec_t prec) {
    HPValue v = gamma_reference(prec).mul_q(lf.gamma_coeff);
    for (unsigned m = 1; m <= lf.n; ++m) {
        v += HPValue::log(HPValue::from_long(lf.n + m, prec + 32)).mul_q(lf.log_coeffs[m - 1]);
    }
    return v - HPValue::from_rational(lf.constant, prec + 32);
}

}  // namespace

TEST_CASE("in_series: n = 1 and n = 2 match the closed-form oracle") {
    const InEvaluation s1 = in_series(1, 256);
    const HPValue oracle1 = linear_form_value(closed_form_Ln_An(1), 256);
    CHECK(s1.value.overlaps(oracle1));
    CHECK(s1.value.value().to_double() == doctest::Approx(0.0407256909).epsilon(1e-9));
    CHECK((s1.value.rigor() == Rigor::rigorous));

    const InEvaluation s2 = in_series(2, 256);
    const HPValue oracle2 = linear_form_value(closed_form_Ln_An(2), 256);
    CHECK(s2.value.overlaps(oracle2));
    CHECK(s2.value.value().to_double() == doctest::Approx(0.00134727210653).epsilon(1e-10));
}

TEST_CASE("in_series: I_3 sits below 2^-12") {
    const InEvaluation s3 = in_series(3, 128);
    CHECK(s3.value.upper() < Real::pow2(-12, 64));
}

TEST_CASE("series aggregation equals literal term-by-term summation") {
    for (unsigned n = 1; n <= 3; ++n) {
        const PartialFraction pf = decompose_Rn(n);
        for (std::uint64_t V : {n + 2ULL, 2 * n + 1ULL, 50ULL}) {
            const HPValue agg = series_partial_sum(pf, V, 192);
            const HPValue lit = series_partial_sum_literal(pf, V, 192);
            CHECK(agg.overlaps(lit));
            Real diff(64);
            mpfr_sub(diff.raw(), agg.value().raw(), lit.value().raw(), MPFR_RNDA);
            mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDU);
            CHECK(diff < Real::pow2(-150, 64));
        }
    }
}

TEST_CASE("in_series: doubling precision shrinks the radius and nests the value") {
    const InEvaluation lo = in_series(2, 128);
    const InEvaluation hi = in_series(2, 256);
    Real half(64);
    mpfr_div_2ui(half.raw(), lo.value.radius().raw(), 1, MPFR_RNDD);
    CHECK(hi.value.radius() < half);
    CHECK(lo.value.lower() <= hi.value.lower());
    CHECK(hi.value.upper() <= lo.value.upper());
}

TEST_CASE("in_series: first term of the n = 1 series") {
    // nu = 2: 5/6 - 2 log(3/2)
    const PartialFraction pf = decompose_Rn(1);
    const HPValue first = series_partial_sum_literal(pf, 2, 128);
    const HPValue expected = HPValue::from_rational(BigRational(5, 6), 160) -
                             HPValue::log(HPValue::from_rational(BigRational(3, 2), 160)).mul_ui(2);
    CHECK(first.overlaps(expected));
    CHECK(first.value().to_double() == doctest::Approx(0.0224026).epsilon(1e-5));
}

TEST_CASE("monotonicity and the 2^-4n bound along the series route") {
    Real prev_lower(64);
    bool have_prev = false;
    for (unsigned n = 1; n <= 10; ++n) {
        const InEvaluation ev = in_series(n, 128);
        CHECK(ev.value.upper() < Real::pow2(-4 * static_cast<long>(n), 64));
        if (have_prev) {
            CHECK(ev.value.upper() < prev_lower);  // strictly decreasing
        }
        prev_lower = ev.value.lower();
        have_prev = true;
    }
}

TEST_CASE("in_closed_form: spot values at n = 1, 2, 3") {
    const InEvaluation c1 = in_closed_form(1, 256);
    CHECK(c1.value.value().to_double() == doctest::Approx(0.0407256909229563).epsilon(1e-13));
    const InEvaluation c2 = in_closed_form(2, 256);
    CHECK(c2.value.value().to_double() == doctest::Approx(0.0013472721065314).epsilon(1e-12));
    const InEvaluation c3 = in_closed_form(3, 256);
    CHECK(closed_form_Ln_An(3).gamma_coeff == 20);
    CHECK(c3.value.upper() < Real::pow2(-12, 64));
}

TEST_CASE("in_hypergeometric: agrees with the closed form (n = 1, 2)") {
    const InEvaluation h1 = in_hypergeometric(1, 128);
    CHECK((h1.value.rigor() == Rigor::heuristic));
    CHECK(h1.value.overlaps(in_closed_form(1, 128).value));
    CHECK(h1.value.upper() < Real::pow2(-4, 64));

    const InEvaluation h2 = in_hypergeometric(2, 128);
    CHECK(h2.value.overlaps(in_closed_form(2, 128).value));
}

TEST_CASE("in_double_integral: agrees with the closed form and reports panels") {
    const InEvaluation d1 = in_double_integral(1, 128);
    CHECK((d1.value.rigor() == Rigor::heuristic));
    CHECK(d1.value.overlaps(in_closed_form(1, 128).value));
    CHECK(d1.terms_or_panels > 0);
}

TEST_CASE("double-integral integrand arithmetic at (1/2, 1/2), n = 1") {
    // (1/16) / ((3/4) * (-log 1/4)) = 1/(24 log 2) ~ 0.0601123
    const mpfr_prec_t wp = 160;
    HPValue x = HPValue::from_rational(BigRational(1, 2), wp);
    HPValue one = HPValue::from_long(1, wp);
    HPValue g = x * (one - x) * x * (one - x);
    HPValue u = (x * x).sub_ui(1);
    HPValue f = g / (u * HPValue::log1p(u));
    CHECK(f.value().to_double() == doctest::Approx(0.0601122959).epsilon(1e-8));
}

TEST_CASE("evaluate_in dispatch and method names") {
    CHECK(std::string(method_name(Method::series)) == "series");
    CHECK(method_from_name("double_integral").has_value());
    CHECK_FALSE(method_from_name("nope").has_value());
    const InEvaluation ev = evaluate_in(1, 96, Method::series);
    CHECK(ev.n == 1);
    CHECK((ev.method == Method::series));
    CHECK_THROWS_AS(evaluate_in(0, 96, Method::series), std::invalid_argument);
}

TEST_CASE("appendix index shift holds for n = 1..3") {
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(appendix_index_shift_check(n, 96));
    }
}

TEST_CASE("cross_validate: all four routes agree at n = 1") {
    const CrossValidation cv = cross_validate(1, 128, 10.0);
    CHECK(cv.all_agree);
    CHECK(cv.max_gap < Real::of_double(1e-9, 64));
    CHECK((cv.evaluations[0].method == Method::hypergeometric));
    CHECK((cv.evaluations[3].method == Method::closed_form));
}

TEST_CASE("prop-1 oracle: seeded coefficient tables bracket the linear form") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 6; ++i) {
        const PartialFraction pf = seeded_partial_fraction(rng, 4);
        const Prop1OracleCheck check = prop1_oracle_check(pf, 128, 60000);
        CHECK(check.brackets);
    }
}
