#pragma once

#include <vector>

#include "gamma_forms/hp_value.hpp"
#include "gamma_forms/linforms.hpp"
#include "gamma_forms/representations.hpp"

namespace gamma_forms {

// Equality can be refuted at finite precision but never confirmed (that would
// take exact arithmetic with gamma), so the verdict is ternary. A "yes" would
// be a headline finding.
enum class Ternary { yes, no, undecidable };

const char* ternary_name(Ternary t);

struct CriterionReport {
    unsigned n = 0;
    mpfr_prec_t precision = 0;
    Method method = Method::series;
    HPValue log_Sn;
    BigInt floor_log_Sn;
    HPValue frac_log_Sn;
    HPValue d2n_In;
    HPValue delta;  // d_2n I_n - frac(log S_n)
    Ternary equality_holds = Ternary::undecidable;
    BigRational implied_gamma;  // the rational that would make the equality hold
    HPValue implied_gamma_gap;  // |gamma_ref - implied_gamma|
    bool inequality_In_lt_2pow = false;
    bool inclusion_ok = false;
    long terms_used = 0;
};

// Compares frac(log S_n) with d_2n I_n. The floor/frac split is certified
// (no integer inside the interval), escalating precision x2 up to 4 retries;
// throws NumericFailure on exhaustion.
CriterionReport check_criterion(unsigned n, mpfr_prec_t precision, Method method = Method::series);

struct ImpliedGamma {
    BigRational q;  // (d_2n A_n - floor(log S_n)) / (d_2n C(2n,n))
    HPValue gap;    // |gamma_ref - q|
};
ImpliedGamma implied_gamma_approx(unsigned n, mpfr_prec_t precision = 256);

// gamma = (I_n + A_n - L_n) / C(2n,n); rejects the closed-form route (it
// already contains the reference gamma).
HPValue extract_gamma(unsigned n, mpfr_prec_t precision, Method method);

std::vector<CriterionReport> criterion_sweep(unsigned n_max, mpfr_prec_t precision, Method method = Method::series);

// Decimal digits to which x agrees with reference, from the outward distance
// |vx - vref| + rx + rref.
long matching_decimal_digits(const HPValue& x, const HPValue& reference);

}  // namespace gamma_forms
