#include "gamma_forms/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

namespace gamma_forms {

HypergeometricParams HypergeometricParams::from_rationals(const BigRational& a, const BigRational& b,
                                                          const BigRational& c, const BigRational& d,
                                                          const BigRational& e, mpfr_prec_t prec) {
    HypergeometricParams p;
    p.a = HPValue::from_rational(a, prec);
    p.b = HPValue::from_rational(b, prec);
    p.c = HPValue::from_rational(c, prec);
    p.d = HPValue::from_rational(d, prec);
    p.e = HPValue::from_rational(e, prec);
    p.a_q = a;
    p.b_q = b;
    p.c_q = c;
    p.d_q = d;
    p.e_q = e;
    return p;
}

HypergeometricParams HypergeometricParams::from_integers_and_e(unsigned a, unsigned b, unsigned c, unsigned d,
                                                               HPValue e) {
    const mpfr_prec_t prec = e.prec();
    HypergeometricParams p;
    p.a = HPValue::from_long(a, prec);
    p.b = HPValue::from_long(b, prec);
    p.c = HPValue::from_long(c, prec);
    p.d = HPValue::from_long(d, prec);
    p.e = std::move(e);
    p.a_q = BigRational(a);
    p.b_q = BigRational(b);
    p.c_q = BigRational(c);
    p.d_q = BigRational(d);
    return p;
}

HPValue HypergeometricParams::margin() const { return d + e - a - b - c; }

std::optional<BigRational> HypergeometricParams::margin_q() const {
    if (a_q && b_q && c_q && d_q && e_q) {
        return *d_q + *e_q - *a_q - *b_q - *c_q;
    }
    return std::nullopt;
}

namespace {

struct DoubleBounds {
    double lo;
    double hi;
};

DoubleBounds bounds_of(const HPValue& x) {
    double lo = x.lower().to_double(MPFR_RNDD);
    double hi = x.upper().to_double(MPFR_RNDU);
    const double pad = 1e-9 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
    return {lo - pad, hi + pad};
}

// Envelope data for the tail bound: for k >= kstar the term ratio satisfies
// r_k <= 1 - sigma_lo/(k+w) <= ((k+w)/(k+w+1))^sigma_lo, which telescopes to
// sum_{k>=K} T_k <= T_K (1 + (K+w)/s_lo).
struct TailEnvelope {
    double w = 0;
    long kstar = 1;
    Real s_lo = Real(64);  // rounded-down margin, > 0
};

TailEnvelope make_envelope(const HypergeometricParams& p, const HPValue& margin) {
    TailEnvelope env;
    Real slo = margin.lower();
    if (slo.sign() <= 0) {
        throw std::invalid_argument("eval_3f2: margin d+e-a-b-c must be positive (series diverges)");
    }
    env.s_lo = Real(HPValue::kRadiusPrec);
    mpfr_set(env.s_lo.raw(), slo.raw(), MPFR_RNDD);

    const DoubleBounds a = bounds_of(p.a), b = bounds_of(p.b), c = bounds_of(p.c);
    const DoubleBounds d = bounds_of(p.d), e = bounds_of(p.e);
    const double s_dlo = std::max(env.s_lo.to_double(MPFR_RNDD) * (1 - 1e-9) - 1e-12, 1e-12);
    const double s_dhi = margin.upper().to_double(MPFR_RNDU) * (1 + 1e-9) + 1e-12;
    const double sigma_lo = 1 + s_dlo;
    const double sigma_hi = 1 + s_dhi;

    // Elementary symmetric bounds (all parameters positive).
    const double e2_hi = a.hi * b.hi + a.hi * c.hi + b.hi * c.hi;
    const double e3_hi = a.hi * b.hi * c.hi;
    const double q1_hi = 1 + d.hi + e.hi;
    const double f2_lo = d.lo + e.lo + d.lo * e.lo;
    const double f2_hi = d.hi + e.hi + d.hi * e.hi;
    const double f3_lo = d.lo * e.lo;
    const double f3_hi = d.hi * e.hi;
    const double beta_lo = f2_lo - e2_hi;
    const double delta_lo = f3_lo - e3_hi;

    env.w = std::max(0.0, (sigma_hi * q1_hi - beta_lo) / sigma_lo + 1.0) + 1.0;
    const double a2 = beta_lo + env.w * sigma_lo - sigma_hi * q1_hi;  // >= sigma_lo by the choice of w
    const double a1 = delta_lo + env.w * beta_lo - sigma_hi * f2_hi;
    const double a0 = env.w * delta_lo - sigma_hi * f3_hi;
    if (a1 >= 0 && a0 >= 0) {
        env.kstar = 1;
    } else {
        const double root = (std::fabs(a1) + std::sqrt(a1 * a1 + 4.0 * a2 * std::fabs(a0))) / (2.0 * a2);
        env.kstar = static_cast<long>(std::ceil(root)) + 2;
    }
    env.kstar = std::max(env.kstar, 1L);
    return env;
}

Real tail_bound_at(const TailEnvelope& env, long k, const HPValue& term) {
    Real factor(HPValue::kRadiusPrec);
    mpfr_set_d(factor.raw(), static_cast<double>(k) + env.w, MPFR_RNDU);
    mpfr_div(factor.raw(), factor.raw(), env.s_lo.raw(), MPFR_RNDU);
    mpfr_add_ui(factor.raw(), factor.raw(), 1, MPFR_RNDU);
    Real bound(HPValue::kRadiusPrec);
    mpfr_mul(bound.raw(), term.abs_upper().raw(), factor.raw(), MPFR_RNDU);
    return bound;
}

bool is_exact_zero(const HPValue& x, const std::optional<BigRational>& tag) {
    if (tag) return *tag == 0;
    return x.value().is_zero() && x.radius().is_zero();
}

bool fits_small_uint(const std::optional<BigRational>& tag, unsigned long& out) {
    if (!tag || denominator(*tag) != 1) return false;
    const BigInt num = numerator(*tag);
    if (num <= 0 || num > 2'000'000) return false;
    out = num.convert_to<unsigned long>();
    return true;
}

}  // namespace

F32Evaluation eval_3f2_detailed(const HypergeometricParams& p, mpfr_prec_t precision, const F32Options& opt) {
    const mpfr_prec_t wp = precision + 32;

    // An exact-zero upper parameter kills every term past k = 0.
    if (is_exact_zero(p.a, p.a_q) || is_exact_zero(p.b, p.b_q) || is_exact_zero(p.c, p.c_q)) {
        return {HPValue::from_long(1, wp), 1, Real(HPValue::kRadiusPrec), false};
    }

    for (const HPValue* x : {&p.a, &p.b, &p.c, &p.d, &p.e}) {
        if (!x->definitely_positive()) {
            throw std::invalid_argument("eval_3f2: parameters must be positive");
        }
    }

    const HPValue margin = p.margin();
    TailEnvelope env = make_envelope(p, margin);

    Real tol = opt.abs_tol;
    if (tol.is_zero()) {
        tol = Real::pow2(-static_cast<long>(precision), HPValue::kRadiusPrec);
    }
    long cap = opt.max_terms > 0 ? opt.max_terms : std::max(20000L, 800L * static_cast<long>(precision));
    cap = std::max(cap, env.kstar + 8);  // the tail bound is only valid from kstar on

    // Fast path: a, b, c, d small exact integers (e stays a ball). The triple
    // products then fit into unsigned 64-bit arithmetic.
    unsigned long au = 0, bu = 0, cu = 0, du = 0;
    bool fast = fits_small_uint(p.a_q, au) && fits_small_uint(p.b_q, bu) && fits_small_uint(p.c_q, cu) &&
                fits_small_uint(p.d_q, du);
    if (fast) {
        const unsigned long maxp = std::max({au, bu, cu, du});
        if (static_cast<unsigned long>(cap) + maxp + 2 > 2'000'000UL) fast = false;
    }

    F32Evaluation out;
    HPValue term = HPValue::from_long(1, wp);
    HPValue sum = HPValue::from_long(1, wp);
    long k = 0;

    if (fast) {
        HPValue ek = p.e;  // e + k, updated incrementally
        while (true) {
            const unsigned long kk = static_cast<unsigned long>(k);
            const unsigned long num = (au + kk) * (bu + kk) * (cu + kk);
            const unsigned long den = (1 + kk) * (du + kk);
            term = term.mul_ui(num).div_ui(den) / ek;
            const long next = k + 1;  // term now holds T_next
            if (next >= env.kstar) {
                out.tail_bound = tail_bound_at(env, next, term);
                if (out.tail_bound <= tol) {
                    out.terms = next;
                    break;
                }
            }
            if (next >= cap) {
                out.tail_bound = tail_bound_at(env, next, term);
                out.terms = next;
                out.hit_cap = true;
                break;
            }
            sum += term;
            ek = ek.add_ui(1);
            k = next;
        }
    } else {
        HPValue ak = p.a, bk = p.b, ck = p.c, dk = p.d, ek = p.e;
        while (true) {
            HPValue num = ak * bk * ck;
            HPValue den = (dk * ek).mul_ui(static_cast<unsigned long>(k) + 1);
            term = term * num / den;
            const long next = k + 1;
            if (next >= env.kstar) {
                out.tail_bound = tail_bound_at(env, next, term);
                if (out.tail_bound <= tol) {
                    out.terms = next;
                    break;
                }
            }
            if (next >= cap) {
                out.tail_bound = tail_bound_at(env, next, term);
                out.terms = next;
                out.hit_cap = true;
                break;
            }
            sum += term;
            ak = ak.add_ui(1);
            bk = bk.add_ui(1);
            ck = ck.add_ui(1);
            dk = dk.add_ui(1);
            ek = ek.add_ui(1);
            k = next;
        }
    }

    out.value = sum.with_extra_radius(out.tail_bound);
    return out;
}

HPValue eval_3f2(const HypergeometricParams& p, mpfr_prec_t precision) {
    return eval_3f2_detailed(p, precision).value;
}

HPValue gamma_ratio_poly(const HPValue& t, unsigned shift) {
    if (shift == 0) {
        return HPValue::from_long(1, t.prec());
    }
    if (!t.definitely_positive()) {
        throw std::invalid_argument("gamma_ratio_poly: requires t > 0");
    }
    HPValue prod = t;
    for (unsigned i = 1; i < shift; ++i) {
        prod = prod * t.add_ui(i);
    }
    return HPValue::from_long(1, t.prec()) / prod;
}

ThomaeReport thomae_check(const HypergeometricParams& p, mpfr_prec_t precision) {
    if (!(p.a_q && p.b_q && p.c_q && p.d_q && p.e_q)) {
        throw std::invalid_argument("thomae_check: requires exact rational parameters");
    }
    BigRational aq = *p.a_q, bq = *p.b_q, cq = *p.c_q, dq = *p.d_q, eq = *p.e_q;
    if (aq <= 0 || bq <= 0 || cq <= 0 || dq <= 0 || eq <= 0) {
        throw std::invalid_argument("thomae_check: parameters must be positive");
    }
    if (dq - aq <= 0 || eq - aq <= 0) {
        throw std::invalid_argument("thomae_check: requires d-a > 0 and e-a > 0");
    }
    const BigRational sq = dq + eq - aq - bq - cq;
    if (sq <= 0) {
        throw std::invalid_argument("thomae_check: original series diverges (margin <= 0)");
    }
    // The finite-product prefactor needs integer shifts: b (or c, they are
    // interchangeable) and d-a must be positive integers.
    if (denominator(bq) != 1) {
        std::swap(bq, cq);
    }
    if (denominator(bq) != 1) {
        throw std::invalid_argument("thomae_check: needs an integer upper parameter b or c");
    }
    const BigRational pq = dq - aq;
    if (denominator(pq) != 1) {
        throw std::invalid_argument("thomae_check: d-a must be a positive integer");
    }
    const unsigned long b_u = numerator(bq).convert_to<unsigned long>();
    const unsigned long p_u = numerator(pq).convert_to<unsigned long>();

    const mpfr_prec_t wp = precision + 32;
    HypergeometricParams orig = HypergeometricParams::from_rationals(aq, bq, cq, dq, eq, wp);
    HypergeometricParams xform =
        HypergeometricParams::from_rationals(sq, dq - aq, eq - aq, sq + bq, sq + cq, wp);

    ThomaeReport rep;
    rep.lhs = eval_3f2(orig, precision);

    // Gamma(s)Gamma(d)Gamma(e) / (Gamma(a)Gamma(s+b)Gamma(s+c)) as finite
    // products: [Gamma(s)/Gamma(s+b)] * [Gamma(d)/Gamma(a)] * [Gamma(e)/Gamma(s+c)],
    // with shifts b, d-a and b-(d-a), all integers here.
    HPValue s_ball = HPValue::from_rational(sq, wp);
    HPValue a_ball = HPValue::from_rational(aq, wp);
    HPValue prefactor = gamma_ratio_poly(s_ball, static_cast<unsigned>(b_u));
    prefactor = prefactor / gamma_ratio_poly(a_ball, static_cast<unsigned>(p_u));
    if (b_u >= p_u) {
        HPValue sc = HPValue::from_rational(sq + cq, wp);
        prefactor = prefactor / gamma_ratio_poly(sc, static_cast<unsigned>(b_u - p_u));
    } else {
        HPValue e_ball = HPValue::from_rational(eq, wp);
        prefactor = prefactor * gamma_ratio_poly(e_ball, static_cast<unsigned>(p_u - b_u));
    }

    rep.rhs = prefactor * eval_3f2(xform, precision);
    rep.agree = rep.lhs.overlaps(rep.rhs);
    return rep;
}

}  // namespace gamma_forms
