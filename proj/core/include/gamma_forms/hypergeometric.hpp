#pragma once

#include <optional>

#include "gamma_forms/exact.hpp"
#include "gamma_forms/hp_value.hpp"

namespace gamma_forms {

// Parameters of 3F2(a, b, c; d, e | 1). All parameters must be positive and
// the series converges only when the margin s = d+e-a-b-c is positive.
// Exact rational tags travel alongside the balls when the parameter is known
// exactly (required by thomae_check, optional elsewhere).
struct HypergeometricParams {
    HPValue a, b, c, d, e;
    std::optional<BigRational> a_q, b_q, c_q, d_q, e_q;

    static HypergeometricParams from_rationals(const BigRational& a, const BigRational& b, const BigRational& c,
                                               const BigRational& d, const BigRational& e, mpfr_prec_t prec);
    // Integer upper/lower parameters with an arbitrary ball for e; used by the
    // integral representation where e depends on the quadrature node.
    static HypergeometricParams from_integers_and_e(unsigned a, unsigned b, unsigned c, unsigned d, HPValue e);

    HPValue margin() const;  // d+e-a-b-c as a ball
    std::optional<BigRational> margin_q() const;
};

struct F32Options {
    // Stop once the rigorous tail bound drops below this (defaults to
    // 2^-precision when left as zero).
    Real abs_tol = Real(64);
    // Hard cap on summed terms; 0 selects max(20000, 800*precision). When the
    // cap is hit the (larger) tail bound still goes into the radius, so the
    // result stays a valid enclosure, just a wider one.
    long max_terms = 0;
};

struct F32Evaluation {
    HPValue value;
    long terms = 0;
    Real tail_bound = Real(64);
    bool hit_cap = false;
};

// Sum of the all-positive series with a rigorous tail bound folded into the
// radius. The bound: once k >= kstar (computed from the parameters), the term
// ratio is at most ((k+w)/(k+w+1))^(1+s), so sum_{k>=K} T_k <= T_K (1 + (K+w)/s).
F32Evaluation eval_3f2_detailed(const HypergeometricParams& p, mpfr_prec_t precision, const F32Options& opt = {});
HPValue eval_3f2(const HypergeometricParams& p, mpfr_prec_t precision);

// Gamma(t)/Gamma(t+shift) = 1/(t(t+1)...(t+shift-1)) for t > 0. The only form
// of Gamma this library ever needs.
HPValue gamma_ratio_poly(const HPValue& t, unsigned shift);

// Checks the unit-argument transformation
//   Gamma(a)/(Gamma(d)Gamma(e)) 3F2(a,b,c;d,e|1)
//     = Gamma(s)/(Gamma(s+b)Gamma(s+c)) 3F2(s,d-a,e-a;s+b,s+c|1),  s = d+e-a-b-c.
// Both reported sides carry the common positive factor Gamma(d)Gamma(e)/Gamma(a),
// which keeps every Gamma ratio inside gamma_ratio_poly's finite-product domain;
// the agreement predicate is unaffected. Supported domain: exact rational
// parameters, d-a a positive integer, e-a > 0, and b (or c) a positive integer.
struct ThomaeReport {
    HPValue lhs;
    HPValue rhs;
    bool agree = false;
};
ThomaeReport thomae_check(const HypergeometricParams& p, mpfr_prec_t precision);

}  // namespace gamma_forms
