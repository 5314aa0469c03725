#include "gamma_forms/quadrature.hpp"

#include "gamma_forms/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace gamma_forms {

namespace {

struct GLRule {
    std::vector<Real> nodes;    // ascending on [-1, 1]
    std::vector<Real> weights;
};

// Legendre P_n and P_{n-1} at x.
void legendre_pair(int n, const Real& x, Real& pn, Real& pnm1, mpfr_prec_t prec) {
    Real p0 = Real::of_long(1, prec);
    Real p1 = x;
    Real tmp(prec);
    for (int j = 2; j <= n; ++j) {
        // p_j = ((2j-1) x p_{j-1} - (j-1) p_{j-2}) / j
        mpfr_mul(tmp.raw(), x.raw(), p1.raw(), MPFR_RNDN);
        mpfr_mul_ui(tmp.raw(), tmp.raw(), 2UL * j - 1, MPFR_RNDN);
        Real t2(prec);
        mpfr_mul_ui(t2.raw(), p0.raw(), j - 1, MPFR_RNDN);
        mpfr_sub(tmp.raw(), tmp.raw(), t2.raw(), MPFR_RNDN);
        mpfr_div_ui(tmp.raw(), tmp.raw(), j, MPFR_RNDN);
        p0 = p1;
        p1 = tmp;
    }
    pn = p1;
    pnm1 = p0;
}

GLRule build_gl_rule(int order, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    GLRule rule;
    rule.nodes.resize(order, Real(wp));
    rule.weights.resize(order, Real(wp));
    Real stop = Real::pow2(-static_cast<long>(prec) - 16, 64);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        Real x = Real::of_double(std::cos(M_PI * (i + 0.75) / (order + 0.5)), wp);
        if (order % 2 == 1 && i == order / 2) {
            x = Real::of_long(0, wp);
        }
        Real pn(wp), pnm1(wp), dp(wp), dx(wp);
        for (int it = 0; it < 80; ++it) {
            legendre_pair(order, x, pn, pnm1, wp);
            // dp = order (x pn - pnm1) / (x^2 - 1)
            Real num(wp), den(wp);
            mpfr_mul(num.raw(), x.raw(), pn.raw(), MPFR_RNDN);
            mpfr_sub(num.raw(), num.raw(), pnm1.raw(), MPFR_RNDN);
            mpfr_mul_ui(num.raw(), num.raw(), order, MPFR_RNDN);
            mpfr_sqr(den.raw(), x.raw(), MPFR_RNDN);
            mpfr_sub_ui(den.raw(), den.raw(), 1, MPFR_RNDN);
            mpfr_div(dp.raw(), num.raw(), den.raw(), MPFR_RNDN);
            mpfr_div(dx.raw(), pn.raw(), dp.raw(), MPFR_RNDN);
            mpfr_sub(x.raw(), x.raw(), dx.raw(), MPFR_RNDN);
            Real adx(64);
            mpfr_abs(adx.raw(), dx.raw(), MPFR_RNDU);
            if (adx < stop || dx.is_zero()) break;
        }
        legendre_pair(order, x, pn, pnm1, wp);
        Real num(wp), den(wp);
        mpfr_mul(num.raw(), x.raw(), pn.raw(), MPFR_RNDN);
        mpfr_sub(num.raw(), num.raw(), pnm1.raw(), MPFR_RNDN);
        mpfr_mul_ui(num.raw(), num.raw(), order, MPFR_RNDN);
        mpfr_sqr(den.raw(), x.raw(), MPFR_RNDN);
        mpfr_sub_ui(den.raw(), den.raw(), 1, MPFR_RNDN);
        mpfr_div(dp.raw(), num.raw(), den.raw(), MPFR_RNDN);
        // w = 2 / ((1 - x^2) dp^2)
        Real w(wp);
        mpfr_sqr(w.raw(), x.raw(), MPFR_RNDN);
        mpfr_ui_sub(w.raw(), 1, w.raw(), MPFR_RNDN);
        Real dp2(wp);
        mpfr_sqr(dp2.raw(), dp.raw(), MPFR_RNDN);
        mpfr_mul(w.raw(), w.raw(), dp2.raw(), MPFR_RNDN);
        mpfr_ui_div(w.raw(), 2, w.raw(), MPFR_RNDN);

        // x is the i-th root in descending order; mirror to fill both ends.
        Real negx(wp);
        mpfr_neg(negx.raw(), x.raw(), MPFR_RNDN);
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.nodes[i] = negx;
        rule.weights[i] = w;
    }
    return rule;
}

const GLRule& gl_rule(int order, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, GLRule> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(order, static_cast<long>(prec));
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_gl_rule(order, prec)).first;
    }
    return it->second;
}

Real real_mid(const Real& lo, const Real& hi, mpfr_prec_t wp) {
    Real m(wp);
    mpfr_add(m.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

Real real_half_width(const Real& lo, const Real& hi, mpfr_prec_t wp) {
    Real h(wp);
    mpfr_sub(h.raw(), hi.raw(), lo.raw(), MPFR_RNDN);
    mpfr_div_2ui(h.raw(), h.raw(), 1, MPFR_RNDN);
    return h;
}

Real rule_diff(const HPValue& qh, const HPValue& ql) {
    Real est(HPValue::kRadiusPrec);
    mpfr_sub(est.raw(), qh.value().raw(), ql.value().raw(), MPFR_RNDA);
    mpfr_abs(est.raw(), est.raw(), MPFR_RNDU);
    return est;
}

struct Panel1D {
    Real lo, hi;
    HPValue value;
    Real est;
    double est_d = 0;
};

struct Ctx1D {
    const Integrand1D& f;
    mpfr_prec_t wp;
    const GLRule& low;
    const GLRule& high;
    long evals = 0;
};

HPValue apply_rule_1d(Ctx1D& ctx, const GLRule& rule, const Real& mid, const Real& half) {
    HPValue q = HPValue::zero(ctx.wp);
    Real x(ctx.wp), w(ctx.wp);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        mpfr_mul(x.raw(), half.raw(), rule.nodes[i].raw(), MPFR_RNDN);
        mpfr_add(x.raw(), x.raw(), mid.raw(), MPFR_RNDN);
        mpfr_mul(w.raw(), half.raw(), rule.weights[i].raw(), MPFR_RNDN);
        q += ctx.f(x, ctx.wp).mul_real(w);
        ++ctx.evals;
    }
    return q;
}

Panel1D eval_panel_1d(Ctx1D& ctx, Real lo, Real hi) {
    Panel1D p{std::move(lo), std::move(hi), HPValue::zero(ctx.wp), Real(HPValue::kRadiusPrec)};
    Real mid = real_mid(p.lo, p.hi, ctx.wp);
    Real half = real_half_width(p.lo, p.hi, ctx.wp);
    HPValue ql = apply_rule_1d(ctx, ctx.low, mid, half);
    HPValue qh = apply_rule_1d(ctx, ctx.high, mid, half);
    p.est = rule_diff(qh, ql);
    p.est_d = p.est.to_double(MPFR_RNDU);
    p.value = std::move(qh);
    return p;
}

Real resolve_tol(const QuadOptions& opt) {
    if (!opt.abs_tol.is_zero()) return opt.abs_tol;
    return Real::pow2(-static_cast<long>(opt.precision), 64);
}

QuadOutcome drive_1d(Ctx1D& ctx, std::vector<Panel1D> panels, const Real& tol, long max_panels) {
    while (static_cast<long>(panels.size()) < max_panels) {
        Real total(HPValue::kRadiusPrec);
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            mpfr_add(total.raw(), total.raw(), panels[i].est.raw(), MPFR_RNDU);
            if (panels[i].est > panels[worst].est) worst = i;
        }
        if (total <= tol || panels[worst].est.is_zero()) break;
        Panel1D victim = std::move(panels[worst]);
        panels.erase(panels.begin() + static_cast<std::ptrdiff_t>(worst));
        Real mid = real_mid(victim.lo, victim.hi, ctx.wp);
        panels.push_back(eval_panel_1d(ctx, victim.lo, mid));
        panels.push_back(eval_panel_1d(ctx, mid, victim.hi));
    }
    std::sort(panels.begin(), panels.end(), [](const Panel1D& a, const Panel1D& b) { return a.lo < b.lo; });
    HPValue value = HPValue::zero(ctx.wp);
    Real est_total(HPValue::kRadiusPrec);
    for (const Panel1D& p : panels) {
        value += p.value;
        mpfr_add(est_total.raw(), est_total.raw(), p.est.raw(), MPFR_RNDU);
    }
    QuadOutcome out;
    out.value = value.with_extra_radius(est_total).with_rigor(Rigor::heuristic);
    out.evaluations = ctx.evals;
    out.panels = static_cast<long>(panels.size());
    out.converged = est_total <= tol;
    return out;
}

}  // namespace

QuadOutcome integrate_finite(const Integrand1D& f, const Real& lo, const Real& hi, const QuadOptions& opt) {
    const mpfr_prec_t wp = opt.precision + 32;
    Ctx1D ctx{f, wp, gl_rule(opt.order, wp), gl_rule(2 * opt.order, wp)};
    std::vector<Panel1D> panels;
    panels.push_back(eval_panel_1d(ctx, lo, hi));
    return drive_1d(ctx, std::move(panels), resolve_tol(opt), opt.max_panels);
}

QuadOutcome integrate_semi_infinite(const Integrand1D& f, const Real& lower, const TailBound& tail_bound,
                                    const QuadOptions& opt) {
    const mpfr_prec_t wp = opt.precision + 32;
    Real tol = resolve_tol(opt);
    Real tol_half(64);
    mpfr_div_2ui(tol_half.raw(), tol.raw(), 1, MPFR_RNDD);

    Real T(wp);
    Real tail(64);
    bool found = false;
    std::vector<Real> cuts;  // lower + 2^j breakpoints
    for (long j = 0; j <= 200; ++j) {
        mpfr_set_ui_2exp(T.raw(), 1, j, MPFR_RNDN);
        mpfr_add(T.raw(), T.raw(), lower.raw(), MPFR_RNDN);
        cuts.push_back(T);
        tail = tail_bound(T);
        if (tail < tol_half) {
            found = true;
            break;
        }
    }
    if (!found) {
        throw NumericFailure("integrate_semi_infinite: tail bound never drops below target");
    }

    Ctx1D ctx{f, wp, gl_rule(opt.order, wp), gl_rule(2 * opt.order, wp)};
    std::vector<Panel1D> panels;
    Real prev = lower;
    for (const Real& cut : cuts) {
        panels.push_back(eval_panel_1d(ctx, prev, cut));
        prev = cut;
    }
    QuadOutcome out = drive_1d(ctx, std::move(panels), tol_half, opt.max_panels);
    out.value = out.value.with_extra_radius(tail);
    return out;
}

namespace {

struct Panel2D {
    Real x0, x1, y0, y1;
    HPValue value;
    Real est;
};

struct Ctx2D {
    const Integrand2D& f;
    mpfr_prec_t wp;
    const GLRule& low;
    const GLRule& high;
    long evals = 0;
};

HPValue apply_rule_2d(Ctx2D& ctx, const GLRule& rule, const Real& mx, const Real& hx, const Real& my,
                      const Real& hy) {
    HPValue q = HPValue::zero(ctx.wp);
    Real x(ctx.wp), y(ctx.wp), w(ctx.wp), wy(ctx.wp);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        mpfr_mul(x.raw(), hx.raw(), rule.nodes[i].raw(), MPFR_RNDN);
        mpfr_add(x.raw(), x.raw(), mx.raw(), MPFR_RNDN);
        Real wx(ctx.wp);
        mpfr_mul(wx.raw(), hx.raw(), rule.weights[i].raw(), MPFR_RNDN);
        HPValue row = HPValue::zero(ctx.wp);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            mpfr_mul(y.raw(), hy.raw(), rule.nodes[j].raw(), MPFR_RNDN);
            mpfr_add(y.raw(), y.raw(), my.raw(), MPFR_RNDN);
            mpfr_mul(wy.raw(), hy.raw(), rule.weights[j].raw(), MPFR_RNDN);
            row += ctx.f(x, y, ctx.wp).mul_real(wy);
            ++ctx.evals;
        }
        q += row.mul_real(wx);
    }
    return q;
}

Panel2D eval_panel_2d(Ctx2D& ctx, Real x0, Real x1, Real y0, Real y1) {
    Panel2D p{std::move(x0), std::move(x1), std::move(y0), std::move(y1), HPValue::zero(ctx.wp),
              Real(HPValue::kRadiusPrec)};
    Real mx = real_mid(p.x0, p.x1, ctx.wp);
    Real hx = real_half_width(p.x0, p.x1, ctx.wp);
    Real my = real_mid(p.y0, p.y1, ctx.wp);
    Real hy = real_half_width(p.y0, p.y1, ctx.wp);
    HPValue ql = apply_rule_2d(ctx, ctx.low, mx, hx, my, hy);
    HPValue qh = apply_rule_2d(ctx, ctx.high, mx, hx, my, hy);
    p.est = rule_diff(qh, ql);
    p.value = std::move(qh);
    return p;
}

}  // namespace

QuadOutcome integrate_unit_square(const Integrand2D& f, const QuadOptions& opt) {
    const mpfr_prec_t wp = opt.precision + 32;
    // Lower GL orders keep the tensor grids affordable.
    const int order = std::min(opt.order, 12);
    Ctx2D ctx{f, wp, gl_rule(order, wp), gl_rule(2 * order, wp)};
    Real tol = resolve_tol(opt);

    // Dyadic breakpoints: axis_depth levels toward 0, corner_depth toward 1.
    std::vector<Real> bps;
    bps.push_back(Real::of_long(0, wp));
    for (int a = opt.axis_depth; a >= 1; --a) {
        bps.push_back(Real::pow2(-a, wp));
    }
    for (int d = 1; d <= opt.corner_depth; ++d) {
        Real b(wp);
        Real h = Real::pow2(-d, wp);
        mpfr_ui_sub(b.raw(), 1, h.raw(), MPFR_RNDN);
        bps.push_back(b);
    }
    bps.push_back(Real::of_long(1, wp));

    std::vector<Panel2D> panels;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
            panels.push_back(eval_panel_2d(ctx, bps[i], bps[i + 1], bps[j], bps[j + 1]));
        }
    }

    Real initial_total(HPValue::kRadiusPrec);
    for (const Panel2D& p : panels) {
        mpfr_add(initial_total.raw(), initial_total.raw(), p.est.raw(), MPFR_RNDU);
    }

    while (static_cast<long>(panels.size()) < opt.max_panels) {
        Real total(HPValue::kRadiusPrec);
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            mpfr_add(total.raw(), total.raw(), panels[i].est.raw(), MPFR_RNDU);
            if (panels[i].est > panels[worst].est) worst = i;
        }
        if (total <= tol || panels[worst].est.is_zero()) break;
        Panel2D victim = std::move(panels[worst]);
        panels.erase(panels.begin() + static_cast<std::ptrdiff_t>(worst));
        Real mx = real_mid(victim.x0, victim.x1, wp);
        Real my = real_mid(victim.y0, victim.y1, wp);
        panels.push_back(eval_panel_2d(ctx, victim.x0, mx, victim.y0, my));
        panels.push_back(eval_panel_2d(ctx, mx, victim.x1, victim.y0, my));
        panels.push_back(eval_panel_2d(ctx, victim.x0, mx, my, victim.y1));
        panels.push_back(eval_panel_2d(ctx, mx, victim.x1, my, victim.y1));
    }

    std::sort(panels.begin(), panels.end(), [](const Panel2D& a, const Panel2D& b) {
        int cx = a.x0.cmp(b.x0);
        if (cx != 0) return cx < 0;
        return a.y0.cmp(b.y0) < 0;
    });
    HPValue value = HPValue::zero(wp);
    Real est_total(HPValue::kRadiusPrec);
    for (const Panel2D& p : panels) {
        value += p.value;
        mpfr_add(est_total.raw(), est_total.raw(), p.est.raw(), MPFR_RNDU);
    }

    QuadOutcome out;
    out.value = value.with_extra_radius(est_total).with_rigor(Rigor::heuristic);
    out.evaluations = ctx.evals;
    out.panels = static_cast<long>(panels.size());
    out.converged = est_total <= tol;
    if (!out.converged) {
        // Refinement that stopped contracting is a failure; an unconverged but
        // shrinking estimate still yields an honest (wide) radius.
        Real quarter(HPValue::kRadiusPrec);
        mpfr_div_2ui(quarter.raw(), initial_total.raw(), 2, MPFR_RNDD);
        if (est_total > quarter) {
            throw NumericFailure("integrate_unit_square: refinement did not contract within the panel budget");
        }
    }
    return out;
}

BetaIntegralCheck beta_integral_check(unsigned n, const HPValue& t, mpfr_prec_t precision) {
    if (n == 0) {
        throw std::invalid_argument("beta_integral_check: n must be >= 1");
    }
    if (!t.add_ui(1).definitely_positive()) {
        throw std::invalid_argument("beta_integral_check: requires t > -1");
    }
    const mpfr_prec_t wp = precision + 32;

    BigInt nfact = 1;
    for (unsigned i = 2; i <= n; ++i) nfact *= i;

    BetaIntegralCheck out;
    out.closed = HPValue::from_bigint(nfact, wp) * gamma_ratio_poly(t.add_ui(n + 1), n + 1);

    HPValue t_plus_n = t.add_ui(n);
    Integrand1D f = [&](const Real& u, mpfr_prec_t fwp) {
        HPValue ub = HPValue::from_real(u);
        HPValue power = HPValue::exp(t_plus_n * HPValue::log(ub));
        HPValue om = (HPValue::from_long(1, fwp) - ub).pow_ui(n);
        return power * om;
    };

    QuadOptions opt;
    opt.precision = precision;
    opt.abs_tol = Real::pow2(-static_cast<long>(std::min<mpfr_prec_t>(precision, 96)), 64);
    QuadOutcome q = integrate_finite(f, Real::of_long(0, wp), Real::of_long(1, wp), opt);
    out.numeric = q.value;
    out.agree = out.numeric.overlaps(out.closed);
    return out;
}

}  // namespace gamma_forms
