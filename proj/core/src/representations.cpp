#include "gamma_forms/representations.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "gamma_forms/hypergeometric.hpp"
#include "gamma_forms/numerics.hpp"
#include "gamma_forms/quadrature.hpp"

namespace gamma_forms {

const char* method_name(Method m) {
    switch (m) {
        case Method::hypergeometric: return "hypergeometric";
        case Method::series: return "series";
        case Method::double_integral: return "double_integral";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& s) {
    if (s == "hypergeometric") return Method::hypergeometric;
    if (s == "series") return Method::series;
    if (s == "double_integral") return Method::double_integral;
    if (s == "closed_form") return Method::closed_form;
    return std::nullopt;
}

namespace {

void require_positive_n(unsigned n, const char* who) {
    if (n == 0) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Aggregated log/reciprocal coefficients of sum_{nu=n+1}^{V} inner integrals:
// the log(m) coefficient is -sum of B_k1 over the k-window {k : n+1 <= m-k <= V},
// which is the full 0..n window (hence exactly zero by relation (5.1)) for all
// interior m. Only m in [n+1, 2n] and [V+1, V+n] survive with log terms.
struct BoundaryTerm {
    std::uint64_t m;
    BigRational recip_coeff;  // q(m): coefficient of 1/m
    BigRational log_coeff;    // c(m): coefficient of log m
};

std::vector<BoundaryTerm> boundary_terms(const PartialFraction& pf, std::uint64_t V) {
    const unsigned n = pf.n;
    std::vector<BoundaryTerm> out;
    for (std::uint64_t m = n + 1; m <= 2 * n && m <= V + n; ++m) {
        BoundaryTerm bt{m, 0, 0};
        const std::uint64_t khi = std::min<std::uint64_t>(n, m - n - 1);
        const std::uint64_t klo = m > V ? m - V : 0;
        for (std::uint64_t k = klo; k <= khi; ++k) {
            bt.recip_coeff += pf.b2[static_cast<std::size_t>(k)];
            bt.log_coeff -= pf.b1[static_cast<std::size_t>(k)];
        }
        out.push_back(std::move(bt));
    }
    for (std::uint64_t m = std::max<std::uint64_t>(V + 1, 2 * n + 1); m <= V + n; ++m) {
        BoundaryTerm bt{m, 0, 0};
        const std::uint64_t klo = m - V;
        const std::uint64_t khi = std::min<std::uint64_t>(n, m - n - 1);
        for (std::uint64_t k = klo; k <= khi; ++k) {
            bt.recip_coeff += pf.b2[static_cast<std::size_t>(k)];
            bt.log_coeff -= pf.b1[static_cast<std::size_t>(k)];
        }
        out.push_back(std::move(bt));
    }
    return out;
}

HPValue eval_boundary_terms(const std::vector<BoundaryTerm>& terms, mpfr_prec_t wp) {
    HPValue acc = HPValue::zero(wp);
    for (const BoundaryTerm& bt : terms) {
        if (bt.recip_coeff != 0) {
            acc += HPValue::from_rational(bt.recip_coeff / BigRational(bt.m), wp);
        }
        if (bt.log_coeff != 0) {
            acc += HPValue::log(HPValue::from_long(static_cast<long>(bt.m), wp)).mul_q(bt.log_coeff);
        }
    }
    return acc;
}

}  // namespace

// The aggregated boundary coefficients reach the scale of sum |B_k1|+|B_k2|
// (4^n for the R_n tables) while the sum itself can sit near 2^-4n, so the
// working precision must absorb that cancellation on top of the request.
static mpfr_prec_t cancellation_guard(const PartialFraction& pf) {
    BigRational mass = 1;
    for (unsigned k = 0; k <= pf.n; ++k) {
        mass += boost::multiprecision::abs(pf.b1[k]) + boost::multiprecision::abs(pf.b2[k]);
    }
    const BigInt ceil_mass = numerator(mass) / denominator(mass) + 1;
    return static_cast<mpfr_prec_t>(boost::multiprecision::msb(ceil_mass)) + 4 * pf.n + 48;
}

HPValue series_partial_sum(const PartialFraction& pf, std::uint64_t V, mpfr_prec_t precision) {
    if (!validate_asymptotic(pf)) {
        throw std::invalid_argument("series_partial_sum: partial fraction is not asymptotically valid");
    }
    const unsigned n = pf.n;
    if (V <= n) {
        return HPValue::zero(precision + 32);
    }
    if (V < 2 * static_cast<std::uint64_t>(n) + 1) {
        return series_partial_sum_literal(pf, V, precision);
    }
    const mpfr_prec_t wp = precision + 32 + cancellation_guard(pf);

    HPValue acc = eval_boundary_terms(boundary_terms(pf, V), wp);

    // Interior: every m in [2n+1, V] carries coefficient sum(B_k2) and no log.
    BigRational b_total = 0;
    for (const BigRational& b : pf.b2) b_total += b;
    if (b_total != 0) {
        HPValue recips = HPValue::zero(wp);
        for (std::uint64_t m = 2 * n + 1; m <= V; ++m) {
            recips += HPValue::one_over_ui(m, wp);
        }
        acc += recips.mul_q(b_total);
    }
    return acc;
}

HPValue series_partial_sum_literal(const PartialFraction& pf, std::uint64_t V, mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + 32 + cancellation_guard(pf);
    HPValue acc = HPValue::zero(wp);
    for (std::uint64_t nu = pf.n + 1; nu <= V; ++nu) {
        const InnerIntegral inner = inner_integral_closed(pf, nu);
        HPValue term = HPValue::from_rational(inner.rational_part, wp);
        for (const auto& [arg, coeff] : inner.log_terms) {
            term += HPValue::log(HPValue::from_long(static_cast<long>(arg), wp)).mul_q(coeff);
        }
        acc += term;
    }
    return acc;
}

std::uint64_t series_truncation(unsigned n, mpfr_prec_t precision) {
    require_positive_n(n, "series_truncation");
    // Tail enclosure half-width ~ (n!)^2 (n+1) / (2(2n+1)) * V^-(2n+1);
    // aim it at 2^-(precision/2) within a work budget that doubles with
    // precision (so the radius keeps contracting as precision grows).
    const double log2C =
        2.0 * std::lgamma(n + 1.0) / std::log(2.0) + std::log2(n + 1.0) - 1.0 - std::log2(2.0 * n + 1.0);
    const double log2V = (static_cast<double>(precision) / 2.0 + log2C) / (2.0 * n + 1.0);
    const double budget = std::min(16.0e6, 20000.0 * (static_cast<double>(precision) / 64.0) *
                                               (static_cast<double>(precision) / 64.0));
    double v = std::min(std::exp2(std::min(log2V, 60.0)), budget);
    v = std::max({v, 2.0 * n + 8.0, 64.0});
    return static_cast<std::uint64_t>(std::llround(v));
}

InEvaluation in_series(unsigned n, mpfr_prec_t precision) {
    require_positive_n(n, "in_series");
    const mpfr_prec_t wp = precision + 32;
    const PartialFraction pf = decompose_Rn(n);
    const std::uint64_t V = series_truncation(n, precision);

    HPValue value = series_partial_sum(pf, V, precision);

    // Tail enclosure from (n!)^2 (t+n)^-(2n+2) <= R_n(t) <= (n!)^2 t^-(2n+2):
    //   (n!)^2/(2n(2n+1)) * (V+n+1)^-2n  <=  sum_{nu>V} int_nu^inf R_n  <=  (n!)^2/(2n(2n+1)) * V^-2n
    const BigInt f2 = factorial(n) * factorial(n);
    BigInt vpow = 1;
    BigInt vnpow = 1;
    const BigInt vb(V);
    const BigInt vnb(V + n + 1);
    for (unsigned i = 0; i < 2 * n; ++i) {
        vpow *= vb;
        vnpow *= vnb;
    }
    const BigRational hi = BigRational(f2) / (BigRational(2 * n) * BigRational(2 * n + 1) * BigRational(vpow));
    const BigRational lo = BigRational(f2) / (BigRational(2 * n) * BigRational(2 * n + 1) * BigRational(vnpow));
    const BigRational mid = (hi + lo) / 2;
    const BigRational halfw = (hi - lo) / 2;

    value += HPValue::from_rational(mid, wp);
    value = value.with_extra_radius(Real::of_rational(halfw, HPValue::kRadiusPrec, MPFR_RNDU));

    InEvaluation ev;
    ev.n = n;
    ev.method = Method::series;
    ev.value = std::move(value);
    ev.terms_or_panels = static_cast<long>(V - n);
    return ev;
}

InEvaluation in_closed_form(unsigned n, mpfr_prec_t precision) {
    require_positive_n(n, "in_closed_form");
    const mpfr_prec_t wp = precision + 32;
    const LinearForm lf = closed_form_Ln_An(n);
    HPValue value = gamma_reference(precision).mul_q(lf.gamma_coeff);
    for (unsigned m = 1; m <= n; ++m) {
        value += HPValue::log(HPValue::from_long(n + m, wp)).mul_q(lf.log_coeffs[m - 1]);
    }
    value -= HPValue::from_rational(lf.constant, wp);

    InEvaluation ev;
    ev.n = n;
    ev.method = Method::closed_form;
    ev.value = std::move(value);
    ev.terms_or_panels = 0;
    return ev;
}

InEvaluation in_hypergeometric(unsigned n, mpfr_prec_t precision) {
    require_positive_n(n, "in_hypergeometric");
    const mpfr_prec_t wp = precision + 32;
    // The series at a node converges polynomially in the margin t, so the
    // reachable accuracy is set by the term cap, not the requested precision;
    // arithmetic beyond that is wasted.
    const mpfr_prec_t node_precision = std::min<mpfr_prec_t>(precision, 160);
    const BigInt f2 = factorial(n) * factorial(n);
    const BigRational pre_q = BigRational(f2) / BigRational(2 * n + 1);

    F32Options node_opt;
    node_opt.max_terms = 16000L + 100L * static_cast<long>(node_precision);

    auto params_at = [&](const HPValue& t) {
        return HypergeometricParams::from_integers_and_e(n + 1, n + 1, 2 * n + 1, 2 * n + 2, t.add_ui(2 * n + 1));
    };

    // Probe the worst node (t = n+1) to learn the reachable relative radius;
    // there is no point driving the quadrature below the node floor.
    const F32Evaluation probe = eval_3f2_detailed(params_at(HPValue::from_long(n + 1, wp)), node_precision, node_opt);
    Real rho(HPValue::kRadiusPrec);
    mpfr_div(rho.raw(), probe.value.radius().raw(), probe.value.value().raw(), MPFR_RNDU);
    mpfr_abs(rho.raw(), rho.raw(), MPFR_RNDU);

    Real tol = Real::pow2(-static_cast<long>(precision), 64);
    Real floor_tol(64);
    mpfr_mul_2si(floor_tol.raw(), rho.raw(), -4 * static_cast<long>(n) + 1, MPFR_RNDU);  // rho * 2^-4n * 2
    if (floor_tol > tol) tol = floor_tol;
    // Node values carry ~2^-node_precision rounding noise; the rule
    // difference cannot contract below it.
    Real noise_tol = Real::pow2(-static_cast<long>(node_precision) + 48, 64);
    if (noise_tol > tol) tol = noise_tol;

    // Per-node series tolerance matched to the quadrature target: the node
    // factor F is O(1), the prefactor integrates to ~2^-4n, so tails below
    // tol * 2^(4n) stop contributing.
    node_opt.abs_tol = Real(64);
    mpfr_mul_2si(node_opt.abs_tol.raw(), tol.raw(), 4 * static_cast<long>(n), MPFR_RNDU);
    Real node_tol_cap = Real::of_double(1e-6, 64);
    if (node_opt.abs_tol > node_tol_cap) node_opt.abs_tol = node_tol_cap;

    long evals_3f2 = 0;
    Integrand1D f = [&](const Real& t, mpfr_prec_t fwp) {
        HPValue tb = HPValue::from_real(t);
        HPValue pre = HPValue::from_rational(pre_q, fwp) * gamma_ratio_poly(tb, 2 * n + 1);
        F32Evaluation fe = eval_3f2_detailed(params_at(tb), node_precision, node_opt);
        evals_3f2 += fe.terms;
        return pre * fe.value;
    };

    // Integrand tail: the integrand equals sum_{v>=0} R_n(t+v) <= R_n(t) +
    // int_t^inf R_n, so int_T^inf <= (n!)^2 (T^-(2n+1)/(2n+1) + T^-2n/(2n(2n+1))).
    TailBound tb = [&](const Real& T) {
        BigInt ti;
        Real tf(T.prec());
        mpfr_floor(tf.raw(), T.raw());
        mpfr_get_z(ti.backend().data(), tf.raw(), MPFR_RNDZ);
        if (ti <= n) ti = n + 1;
        BigInt tpow = 1;
        for (unsigned i = 0; i < 2 * n; ++i) tpow *= ti;
        const BigRational bound = BigRational(f2) / (BigRational(2 * n + 1) * BigRational(tpow * ti)) +
                                  BigRational(f2) / (BigRational(2 * n) * BigRational(2 * n + 1) * BigRational(tpow));
        return Real::of_rational(bound, 64, MPFR_RNDU);
    };

    QuadOptions opt;
    opt.precision = node_precision;
    opt.abs_tol = tol;
    opt.order = 8;  // the integrand is analytic and expensive; octave panels suffice
    opt.max_panels = 2000;
    QuadOutcome q = integrate_semi_infinite(f, Real::of_long(n + 1, wp), tb, opt);

    InEvaluation ev;
    ev.n = n;
    ev.method = Method::hypergeometric;
    ev.value = q.value;
    ev.terms_or_panels = q.evaluations;
    return ev;
}

InEvaluation in_double_integral(unsigned n, mpfr_prec_t precision, int corner_depth) {
    require_positive_n(n, "in_double_integral");

    Integrand2D f = [n](const Real& x, const Real& y, mpfr_prec_t fwp) {
        HPValue xb = HPValue::from_real(x);
        HPValue yb = HPValue::from_real(y);
        HPValue one = HPValue::from_long(1, fwp);
        HPValue g = xb * (one - xb) * yb * (one - yb);
        HPValue gn = g.pow_ui(n);
        HPValue u = (xb * yb).sub_ui(1);          // xy - 1, in (-1, 0)
        HPValue denom = u * HPValue::log1p(u);    // (1-xy)(-log xy) > 0
        return gn / denom;
    };

    Real tol = Real::pow2(-static_cast<long>(precision), 64);
    Real floor1(64);
    mpfr_set_d(floor1.raw(), 1e-11, MPFR_RNDU);
    mpfr_mul_2si(floor1.raw(), floor1.raw(), -4 * static_cast<long>(n), MPFR_RNDU);  // 2^-4n * 1e-11
    Real floor2 = Real::of_double(1e-13, 64);
    if (floor1 > tol) tol = floor1;
    if (tol < floor2) tol = floor2;

    QuadOptions opt;
    // The corner panels cap the reachable accuracy well above 2^-precision;
    // higher arithmetic precision would only slow the node evaluations down.
    opt.precision = std::min<mpfr_prec_t>(precision, 128);
    opt.abs_tol = tol;
    opt.order = 12;
    opt.corner_depth = corner_depth;
    opt.axis_depth = 4;
    opt.max_panels = 20000;
    QuadOutcome q = integrate_unit_square(f, opt);

    InEvaluation ev;
    ev.n = n;
    ev.method = Method::double_integral;
    ev.value = q.value;
    ev.terms_or_panels = q.panels;
    return ev;
}

InEvaluation evaluate_in(unsigned n, mpfr_prec_t precision, Method method) {
    switch (method) {
        case Method::hypergeometric: return in_hypergeometric(n, precision);
        case Method::series: return in_series(n, precision);
        case Method::double_integral: return in_double_integral(n, precision);
        case Method::closed_form: return in_closed_form(n, precision);
    }
    throw std::invalid_argument("evaluate_in: unknown method");
}

bool appendix_index_shift_check(unsigned n, mpfr_prec_t precision) {
    require_positive_n(n, "appendix_index_shift_check");
    const mpfr_prec_t wp = precision + 32;
    const BigInt f2 = factorial(n) * factorial(n);

    QuadOptions opt;
    opt.precision = precision;
    opt.abs_tol = Real::pow2(-static_cast<long>(std::min<mpfr_prec_t>(precision, 96)), 64);
    opt.max_panels = 4000;

    auto power_tail = [&](const BigInt& base_floor) {
        BigInt tpow = 1;
        for (unsigned i = 0; i < 2 * n + 1; ++i) tpow *= base_floor;
        return Real::of_rational(BigRational(f2) / (BigRational(2 * n + 1) * BigRational(tpow)), 64, MPFR_RNDU);
    };

    for (unsigned k = 0; k <= 4; ++k) {
        // Left: int_k^inf (n!)^2 / ((t+n+1)...(t+2n+1))^2 dt.
        Integrand1D left = [&](const Real& t, mpfr_prec_t) {
            HPValue tb = HPValue::from_real(t).add_ui(n + 1);
            HPValue g = gamma_ratio_poly(tb, n + 1);
            return (g * g).mul_z(f2);
        };
        TailBound left_tail = [&](const Real& T) {
            BigInt ti;
            Real tf(T.prec());
            mpfr_floor(tf.raw(), T.raw());
            mpfr_get_z(ti.backend().data(), tf.raw(), MPFR_RNDZ);
            return power_tail(ti + n + 1);
        };
        // Right: int_{k+n+1}^inf R_n(t) dt.
        Integrand1D right = [&](const Real& t, mpfr_prec_t) {
            HPValue tb = HPValue::from_real(t);
            HPValue g = gamma_ratio_poly(tb, n + 1);
            return (g * g).mul_z(f2);
        };
        TailBound right_tail = [&](const Real& T) {
            BigInt ti;
            Real tf(T.prec());
            mpfr_floor(tf.raw(), T.raw());
            mpfr_get_z(ti.backend().data(), tf.raw(), MPFR_RNDZ);
            if (ti < 1) ti = 1;
            return power_tail(ti);
        };

        QuadOutcome lhs = integrate_semi_infinite(left, Real::of_long(k, wp), left_tail, opt);
        QuadOutcome rhs = integrate_semi_infinite(right, Real::of_long(k + n + 1, wp), right_tail, opt);
        if (!lhs.value.overlaps(rhs.value)) {
            return false;
        }
    }
    return true;
}

CrossValidation cross_validate(unsigned n, mpfr_prec_t precision, double safety_factor, bool parallel) {
    require_positive_n(n, "cross_validate");
    CrossValidation cv{{}, Real(HPValue::kRadiusPrec), true, safety_factor};

    if (parallel && std::thread::hardware_concurrency() > 1) {
        auto fh = std::async(std::launch::async, [&] { return in_hypergeometric(n, precision); });
        auto fs = std::async(std::launch::async, [&] { return in_series(n, precision); });
        auto fd = std::async(std::launch::async, [&] { return in_double_integral(n, precision); });
        auto fc = std::async(std::launch::async, [&] { return in_closed_form(n, precision); });
        cv.evaluations = {fh.get(), fs.get(), fd.get(), fc.get()};
    } else {
        cv.evaluations = {in_hypergeometric(n, precision), in_series(n, precision),
                          in_double_integral(n, precision), in_closed_form(n, precision)};
    }

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            Real gap = HPValue::separation(cv.evaluations[i].value, cv.evaluations[j].value);
            if (gap > cv.max_gap) cv.max_gap = gap;
            Real gap_inflated =
                HPValue::separation_inflated(cv.evaluations[i].value, cv.evaluations[j].value, safety_factor);
            if (gap_inflated.sign() > 0) cv.all_agree = false;
        }
    }
    return cv;
}

}  // namespace gamma_forms
