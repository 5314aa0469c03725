#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "gamma_forms/hp_value.hpp"
#include "gamma_forms/linforms.hpp"

namespace gamma_forms {

enum class Method { hypergeometric, series, double_integral, closed_form };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& s);

struct InEvaluation {
    unsigned n = 0;
    Method method = Method::series;
    HPValue value;
    long terms_or_panels = 0;
};

// The integral of (n!)^2 Gamma(t) / ((2n+1) Gamma(2n+1+t)) *
// 3F2(n+1, n+1, 2n+1; 2n+2, 2n+1+t | 1) over t in [n+1, inf), by adaptive
// quadrature with eval_3f2 at every node. Heuristic radius.
InEvaluation in_hypergeometric(unsigned n, mpfr_prec_t precision);

// sum_{nu=n+1}^{V} int_nu^inf R_n, from the exact per-term mixed expressions,
// rounded once at summation time, plus a rigorous two-sided tail enclosure.
// Fully rigorous radius; no 3F2 evaluation anywhere on this route.
InEvaluation in_series(unsigned n, mpfr_prec_t precision);

// Double integral over [0,1]^2 of (x(1-x)y(1-y))^n / ((1-xy)(-log xy)).
// Heuristic radius.
InEvaluation in_double_integral(unsigned n, mpfr_prec_t precision, int corner_depth = 12);

// C(2n,n) gamma_ref + sum c_m log(n+m) - A_n with rigorous rounding tracking.
InEvaluation in_closed_form(unsigned n, mpfr_prec_t precision);

InEvaluation evaluate_in(unsigned n, mpfr_prec_t precision, Method method);

// Finite partial sum sum_{nu=n+1}^{V} int_nu^inf R for any asymptotically
// valid partial fraction: the exact per-nu expressions are aggregated by log
// argument (interior log coefficients cancel exactly under relation (sum
// B_k1 = 0)) and evaluated in one numeric pass. Tail handling is the
// caller's.
HPValue series_partial_sum(const PartialFraction& pf, std::uint64_t V, mpfr_prec_t precision);

// Same sum evaluated term by term through inner_integral_closed; test oracle
// for the aggregated path.
HPValue series_partial_sum_literal(const PartialFraction& pf, std::uint64_t V, mpfr_prec_t precision);

// Truncation policy for in_series: the smallest V whose tail enclosure
// half-width drops below 2^-(precision/2), capped by a work budget that
// scales with precision.
std::uint64_t series_truncation(unsigned n, mpfr_prec_t precision);

// Verifies (first 5 terms, modest precision) that term k of
// sum_k int_k^inf (n!/((t+n+1)...(t+2n+1)))^2 dt equals term k+n+1 of
// sum_{k>=n+1} int_k^inf R_n(t) dt under the shift t -> t+n+1.
bool appendix_index_shift_check(unsigned n, mpfr_prec_t precision = 128);

struct CrossValidation {
    std::array<InEvaluation, 4> evaluations;  // hypergeometric, series, double_integral, closed_form
    Real max_gap;      // largest pairwise interval separation (uninflated radii)
    bool all_agree;    // every pair overlaps after inflating heuristic radii
    double safety_factor;
};
CrossValidation cross_validate(unsigned n, mpfr_prec_t precision, double safety_factor = 10.0,
                               bool parallel = true);

}  // namespace gamma_forms
