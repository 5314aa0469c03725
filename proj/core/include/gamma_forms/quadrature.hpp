#pragma once

#include <functional>

#include "gamma_forms/hp_value.hpp"

namespace gamma_forms {

// Integrands receive an exact node and the working precision; they return a
// ball so their own evaluation radii can flow into the result.
using Integrand1D = std::function<HPValue(const Real& x, mpfr_prec_t wp)>;
using Integrand2D = std::function<HPValue(const Real& x, const Real& y, mpfr_prec_t wp)>;
// Rigorous upper bound on int_T^infinity f.
using TailBound = std::function<Real(const Real& T)>;

struct QuadOptions {
    mpfr_prec_t precision = 256;
    // Target absolute tolerance; zero means 2^-precision.
    Real abs_tol = Real(64);
    long max_panels = 20000;
    // Gauss-Legendre order of the low rule; the error estimate compares
    // against the rule of twice this order.
    int order = 16;
    // Unit square: initial dyadic subdivision depth toward the (1,1) corner.
    int corner_depth = 12;
    // Unit square: initial dyadic subdivision depth toward the axes.
    int axis_depth = 4;
};

struct QuadOutcome {
    HPValue value;  // radius = node radii + nested-rule estimate (+ tail); rigor = heuristic
    long evaluations = 0;
    long panels = 0;
    bool converged = true;
};

// Adaptive Gauss-Legendre with nested-rule error estimation on [lo, hi].
QuadOutcome integrate_finite(const Integrand1D& f, const Real& lo, const Real& hi, const QuadOptions& opt);

// Picks T with tail_bound(T) < tol/2 (T = lower + 2^j), integrates [lower, T]
// adaptively, and adds the tail bound to the radius. Throws NumericFailure if
// the tail bound never drops below target.
QuadOutcome integrate_semi_infinite(const Integrand1D& f, const Real& lower, const TailBound& tail_bound,
                                    const QuadOptions& opt);

// Tensor-product adaptive quadrature over [0,1]^2 with dyadic refinement
// toward the corner (1,1) and toward the axes. Throws NumericFailure if
// refinement stops contracting before the panel budget runs out.
QuadOutcome integrate_unit_square(const Integrand2D& f, const QuadOptions& opt);

// int_0^1 u^(n+t) (1-u)^n du against the closed product form
// n!/((t+n+1)(t+n+2)...(t+2n+1)). Requires t > -1, n >= 1.
struct BetaIntegralCheck {
    HPValue numeric;
    HPValue closed;
    bool agree = false;
};
BetaIntegralCheck beta_integral_check(unsigned n, const HPValue& t, mpfr_prec_t precision);

}  // namespace gamma_forms
