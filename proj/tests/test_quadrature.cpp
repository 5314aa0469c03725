#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma_forms/quadrature.hpp"

using namespace gamma_forms;

namespace {

QuadOptions opts(mpfr_prec_t prec, double tol) {
    QuadOptions o;
    o.precision = prec;
    o.abs_tol = Real::of_double(tol, 64);
    return o;
}

}  // namespace

TEST_CASE("integrate_finite: polynomial and rational examples") {
    const Integrand1D f = [](const Real& x, mpfr_prec_t) {
        const HPValue xb = HPValue::from_real(x);
        return xb * xb;
    };
    const QuadOutcome q = integrate_finite(f, Real::of_long(0, 160), Real::of_long(1, 160), opts(128, 1e-30));
    CHECK(q.converged);
    CHECK(q.value.contains_rational(BigRational(1, 3)));
    CHECK((q.value.rigor() == Rigor::heuristic));
}

TEST_CASE("integrate_semi_infinite: exp(-t) from 0") {
    const Integrand1D f = [](const Real& t, mpfr_prec_t) {
        return HPValue::exp(-HPValue::from_real(t));
    };
    const TailBound tail = [](const Real& T) {
        Real b(64);
        mpfr_neg(b.raw(), T.raw(), MPFR_RNDD);
        mpfr_exp(b.raw(), b.raw(), MPFR_RNDU);
        return b;
    };
    const QuadOutcome q = integrate_semi_infinite(f, Real::of_long(0, 160), tail, opts(128, 1e-25));
    CHECK(q.value.contains_rational(BigRational(1)));
}

TEST_CASE("integrate_semi_infinite: t^-2 from 1") {
    const Integrand1D f = [](const Real& t, mpfr_prec_t wp) {
        const HPValue tb = HPValue::from_real(t);
        return HPValue::from_long(1, wp) / (tb * tb);
    };
    const TailBound tail = [](const Real& T) {
        Real b(64);
        mpfr_ui_div(b.raw(), 1, T.raw(), MPFR_RNDU);
        return b;
    };
    const QuadOutcome q = integrate_semi_infinite(f, Real::of_long(1, 160), tail, opts(128, 1e-20));
    CHECK(q.value.contains_rational(BigRational(1)));
}

TEST_CASE("integrate_semi_infinite: zero integrand with zero tail") {
    const Integrand1D f = [](const Real&, mpfr_prec_t wp) { return HPValue::zero(wp); };
    const TailBound tail = [](const Real&) { return Real(64); };
    const QuadOutcome q = integrate_semi_infinite(f, Real::of_long(0, 128), tail, opts(96, 1e-20));
    CHECK(q.value.value().is_zero());
}

TEST_CASE("integrate_semi_infinite: a tail bound that never drops fails loudly") {
    const Integrand1D f = [](const Real&, mpfr_prec_t wp) { return HPValue::zero(wp); };
    const TailBound tail = [](const Real&) { return Real::of_long(1, 64); };
    CHECK_THROWS_AS(integrate_semi_infinite(f, Real::of_long(0, 128), tail, opts(96, 1e-10)), NumericFailure);
}

TEST_CASE("integrate_unit_square: constants and xy") {
    const Integrand2D one = [](const Real&, const Real&, mpfr_prec_t wp) { return HPValue::from_long(1, wp); };
    QuadOptions o = opts(96, 1e-20);
    o.corner_depth = 4;
    o.axis_depth = 2;
    const QuadOutcome q1 = integrate_unit_square(one, o);
    CHECK(q1.value.contains_rational(BigRational(1)));

    const Integrand2D xy = [](const Real& x, const Real& y, mpfr_prec_t) {
        return HPValue::from_real(x) * HPValue::from_real(y);
    };
    const QuadOutcome q2 = integrate_unit_square(xy, o);
    CHECK(q2.value.contains_rational(BigRational(1, 4)));
}

TEST_CASE("beta_integral_check: explicit values and fractional exponents") {
    const BetaIntegralCheck b10 = beta_integral_check(1, HPValue::zero(128), 96);
    CHECK(b10.agree);
    CHECK(b10.closed.contains_rational(BigRational(1, 6)));
    CHECK(b10.numeric.contains_rational(BigRational(1, 6)));

    const BetaIntegralCheck b11 = beta_integral_check(1, HPValue::from_long(1, 128), 96);
    CHECK(b11.agree);
    CHECK(b11.closed.contains_rational(BigRational(1, 12)));

    const BetaIntegralCheck b2h = beta_integral_check(2, HPValue::from_rational(BigRational(1, 2), 128), 96);
    CHECK(b2h.agree);

    CHECK_THROWS_AS(beta_integral_check(0, HPValue::zero(64), 64), std::invalid_argument);
    CHECK_THROWS_AS(beta_integral_check(1, HPValue::from_long(-2, 64), 64), std::invalid_argument);
}
