#include "gamma_forms/criterion.hpp"

#include <algorithm>

#include "gamma_forms/numerics.hpp"

namespace gamma_forms {

const char* ternary_name(Ternary t) {
    switch (t) {
        case Ternary::yes: return "yes";
        case Ternary::no: return "no";
        case Ternary::undecidable: return "undecidable";
    }
    return "?";
}

namespace {

struct CertifiedLog {
    HPValue log_Sn;
    BigInt floor_part;
    HPValue frac_part;
};

// Certified floor/frac of log S_n; the fractional part is meaningless if the
// interval straddles an integer, so escalate precision until it does not.
CertifiedLog certified_log_split(unsigned n, mpfr_prec_t precision) {
    const FactoredInteger sn = s_n_factored(n);
    mpfr_prec_t wp = precision;
    for (int attempt = 0; attempt <= 4; ++attempt) {
        HPValue log_sn = log_factored(sn, wp);
        if (auto split = log_sn.certified_floor_split()) {
            return {std::move(log_sn), std::move(split->floor), std::move(split->frac)};
        }
        wp *= 2;
    }
    throw NumericFailure("check_criterion: could not certify floor(log S_n) within the retry cap");
}

HPValue gamma_ref_clamped(mpfr_prec_t precision) {
    return gamma_reference(std::min(precision, gamma_reference_capacity()));
}

}  // namespace

CriterionReport check_criterion(unsigned n, mpfr_prec_t precision, Method method) {
    if (n == 0) {
        throw std::invalid_argument("check_criterion: n must be >= 1");
    }
    CriterionReport rep;
    rep.n = n;
    rep.precision = precision;
    rep.method = method;

    CertifiedLog cl = certified_log_split(n, precision);
    rep.log_Sn = std::move(cl.log_Sn);
    rep.floor_log_Sn = std::move(cl.floor_part);
    rep.frac_log_Sn = std::move(cl.frac_part);

    const BigInt d2n = lcm_upto(2 * n);
    const InEvaluation in = evaluate_in(n, precision, method);
    rep.terms_used = in.terms_or_panels;
    rep.d2n_In = in.value.mul_z(d2n);
    rep.delta = rep.d2n_In - rep.frac_log_Sn;
    rep.equality_holds = rep.delta.contains_zero() ? Ternary::undecidable : Ternary::no;

    const LinearForm lf = closed_form_Ln_An(n);
    const BigRational denom = BigRational(d2n * binomial(2 * n, n));
    rep.implied_gamma = (BigRational(d2n) * lf.constant - BigRational(rep.floor_log_Sn)) / denom;
    rep.implied_gamma_gap = (gamma_ref_clamped(precision) - HPValue::from_rational(rep.implied_gamma, precision + 32)).abs();

    rep.inequality_In_lt_2pow = in.value.upper() < Real::pow2(-4 * static_cast<long>(n), 64);
    const InclusionReport inc = check_inclusion(n);
    rep.inclusion_ok = inc.a_integral && inc.logcoeffs_integral;
    return rep;
}

ImpliedGamma implied_gamma_approx(unsigned n, mpfr_prec_t precision) {
    if (n == 0) {
        throw std::invalid_argument("implied_gamma_approx: n must be >= 1");
    }
    CertifiedLog cl = certified_log_split(n, precision);
    const BigInt d2n = lcm_upto(2 * n);
    const LinearForm lf = closed_form_Ln_An(n);
    ImpliedGamma out;
    out.q = (BigRational(d2n) * lf.constant - BigRational(cl.floor_part)) / BigRational(d2n * binomial(2 * n, n));
    out.gap = (gamma_ref_clamped(precision) - HPValue::from_rational(out.q, precision + 32)).abs();
    return out;
}

HPValue extract_gamma(unsigned n, mpfr_prec_t precision, Method method) {
    if (n == 0) {
        throw std::invalid_argument("extract_gamma: n must be >= 1");
    }
    if (method == Method::closed_form) {
        throw std::invalid_argument("extract_gamma: the closed-form route already contains gamma (circular)");
    }
    const mpfr_prec_t wp = precision + 32;
    const InEvaluation in = evaluate_in(n, precision, method);
    const LinearForm lf = closed_form_Ln_An(n);
    HPValue acc = in.value + HPValue::from_rational(lf.constant, wp);
    for (unsigned m = 1; m <= n; ++m) {
        acc -= HPValue::log(HPValue::from_long(n + m, wp)).mul_q(lf.log_coeffs[m - 1]);
    }
    return acc.mul_q(BigRational(1) / lf.gamma_coeff);
}

std::vector<CriterionReport> criterion_sweep(unsigned n_max, mpfr_prec_t precision, Method method) {
    if (n_max == 0) {
        throw std::invalid_argument("criterion_sweep: n_max must be >= 1");
    }
    std::vector<CriterionReport> out;
    out.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        out.push_back(check_criterion(n, precision, method));
    }
    return out;
}

long matching_decimal_digits(const HPValue& x, const HPValue& reference) {
    Real dist(HPValue::kRadiusPrec);
    mpfr_sub(dist.raw(), x.value().raw(), reference.value().raw(), MPFR_RNDA);
    mpfr_abs(dist.raw(), dist.raw(), MPFR_RNDU);
    mpfr_add(dist.raw(), dist.raw(), x.radius().raw(), MPFR_RNDU);
    mpfr_add(dist.raw(), dist.raw(), reference.radius().raw(), MPFR_RNDU);
    if (dist.is_zero()) {
        return static_cast<long>(gamma_forms::HPValue::kRadiusPrec);  // degenerate: identical balls
    }
    Real l10(HPValue::kRadiusPrec);
    mpfr_log10(l10.raw(), dist.raw(), MPFR_RNDU);
    mpfr_neg(l10.raw(), l10.raw(), MPFR_RNDD);
    mpfr_floor(l10.raw(), l10.raw());
    long digits = static_cast<long>(mpfr_get_si(l10.raw(), MPFR_RNDZ));
    return std::max(0L, digits);
}

}  // namespace gamma_forms
