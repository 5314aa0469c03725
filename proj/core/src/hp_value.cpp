#include "gamma_forms/hp_value.hpp"

#include <algorithm>

namespace gamma_forms {

namespace {

Rigor combine(Rigor a, Rigor b) {
    return (a == Rigor::heuristic || b == Rigor::heuristic) ? Rigor::heuristic : Rigor::rigorous;
}

// rad += one ulp of v, rounded up. Called only after an inexact rounding.
void rad_add_ulp(Real& rad, const Real& v) {
    if (v.is_zero()) {
        // Unreachable with mpfr's default exponent range; cheap fallback.
        Real tiny = Real::pow2(-static_cast<long>(v.prec()), HPValue::kRadiusPrec);
        mpfr_add(rad.raw(), rad.raw(), tiny.raw(), MPFR_RNDU);
        return;
    }
    long e = static_cast<long>(mpfr_get_exp(v.raw())) - static_cast<long>(v.prec());
    Real ulp = Real::pow2(e, HPValue::kRadiusPrec);
    mpfr_add(rad.raw(), rad.raw(), ulp.raw(), MPFR_RNDU);
}

// |v| rounded away from zero, at radius precision.
Real rad_abs_up(const Real& v) {
    Real out(HPValue::kRadiusPrec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDA);
    mpfr_abs(out.raw(), out.raw(), MPFR_RNDU);
    return out;
}

// |v| rounded toward zero, at radius precision.
Real rad_abs_down(const Real& v) {
    Real out(HPValue::kRadiusPrec);
    mpfr_set(out.raw(), v.raw(), MPFR_RNDZ);
    mpfr_abs(out.raw(), out.raw(), MPFR_RNDZ);
    return out;
}

// rad *= (1 + 2^-40): absorbs the gap between computed and true magnitudes
// in first-order radius formulas (working precision is always >= 64 bits).
void rad_slack(Real& rad) {
    static const double kSlack = 1.0 + 0x1p-40;
    mpfr_mul_d(rad.raw(), rad.raw(), kSlack, MPFR_RNDU);
}

}  // namespace

HPValue::HPValue(Real value, Real radius, Rigor rigor)
    : v_(std::move(value)), r_(std::move(radius)), rig_(rigor) {
    if (r_.sign() < 0) {
        throw std::invalid_argument("HPValue: negative radius");
    }
}

HPValue HPValue::zero(mpfr_prec_t prec) {
    return HPValue(Real(prec), Real(kRadiusPrec), Rigor::rigorous);
}

HPValue HPValue::from_long(long v, mpfr_prec_t prec) {
    Real val(prec);
    int t = mpfr_set_si(val.raw(), v, MPFR_RNDN);
    Real rad(kRadiusPrec);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), Rigor::rigorous);
}

HPValue HPValue::from_bigint(const BigInt& v, mpfr_prec_t prec) {
    Real val(prec);
    int t = mpfr_set_z(val.raw(), v.backend().data(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), Rigor::rigorous);
}

HPValue HPValue::from_rational(const BigRational& v, mpfr_prec_t prec) {
    Real val(prec);
    int t = mpfr_set_q(val.raw(), v.backend().data(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), Rigor::rigorous);
}

HPValue HPValue::from_real(Real v, Rigor rigor) {
    return HPValue(std::move(v), Real(kRadiusPrec), rigor);
}

HPValue HPValue::one_over_ui(unsigned long m, mpfr_prec_t prec) {
    if (m == 0) throw std::invalid_argument("one_over_ui: division by zero");
    Real val(prec);
    int t = mpfr_ui_div(val.raw(), 1, Real::of_long(static_cast<long>(m), 64).raw(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), Rigor::rigorous);
}

HPValue operator+(const HPValue& a, const HPValue& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real val(p);
    int t = mpfr_add(val.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDN);
    Real rad(HPValue::kRadiusPrec);
    mpfr_add(rad.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), combine(a.rig_, b.rig_));
}

HPValue operator-(const HPValue& a, const HPValue& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real val(p);
    int t = mpfr_sub(val.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDN);
    Real rad(HPValue::kRadiusPrec);
    mpfr_add(rad.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), combine(a.rig_, b.rig_));
}

HPValue operator*(const HPValue& a, const HPValue& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real val(p);
    int t = mpfr_mul(val.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDN);
    // |a_t b_t - av bv| <= |av| rb + |bv| ra + ra rb
    Real rad(HPValue::kRadiusPrec);
    Real term(HPValue::kRadiusPrec);
    mpfr_mul(term.raw(), rad_abs_up(a.v_).raw(), b.r_.raw(), MPFR_RNDU);
    mpfr_set(rad.raw(), term.raw(), MPFR_RNDU);
    mpfr_mul(term.raw(), rad_abs_up(b.v_).raw(), a.r_.raw(), MPFR_RNDU);
    mpfr_add(rad.raw(), rad.raw(), term.raw(), MPFR_RNDU);
    mpfr_mul(term.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
    mpfr_add(rad.raw(), rad.raw(), term.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), combine(a.rig_, b.rig_));
}

HPValue operator/(const HPValue& a, const HPValue& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real denom_lo(HPValue::kRadiusPrec);
    mpfr_sub(denom_lo.raw(), rad_abs_down(b.v_).raw(), b.r_.raw(), MPFR_RNDD);
    if (denom_lo.sign() <= 0) {
        throw NumericFailure("HPValue division: divisor interval contains zero");
    }
    Real val(p);
    int t = mpfr_div(val.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDN);
    // |a_t/b_t - av/bv| <= (ra + |av/bv| rb) / (|bv| - rb)
    Real num(HPValue::kRadiusPrec);
    mpfr_mul(num.raw(), rad_abs_up(val).raw(), b.r_.raw(), MPFR_RNDU);
    rad_slack(num);  // |av/bv| vs rounded |val|
    mpfr_add(num.raw(), num.raw(), a.r_.raw(), MPFR_RNDU);
    Real rad(HPValue::kRadiusPrec);
    mpfr_div(rad.raw(), num.raw(), denom_lo.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), combine(a.rig_, b.rig_));
}

HPValue HPValue::operator-() const {
    Real val(prec());
    mpfr_neg(val.raw(), v_.raw(), MPFR_RNDN);  // exact
    return HPValue(std::move(val), r_, rig_);
}

HPValue HPValue::log(const HPValue& x) {
    Real lo(kRadiusPrec);
    mpfr_sub(lo.raw(), rad_abs_down(x.v_).raw(), x.r_.raw(), MPFR_RNDD);
    if (x.v_.sign() <= 0 || lo.sign() <= 0) {
        throw NumericFailure("HPValue::log: interval not strictly positive");
    }
    Real val(x.prec());
    int t = mpfr_log(val.raw(), x.v_.raw(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    mpfr_div(rad.raw(), x.r_.raw(), lo.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), x.rig_);
}

HPValue HPValue::log1p(const HPValue& x) {
    Real lo(kRadiusPrec);
    mpfr_set(lo.raw(), x.v_.raw(), MPFR_RNDD);
    mpfr_sub(lo.raw(), lo.raw(), x.r_.raw(), MPFR_RNDD);
    mpfr_add_ui(lo.raw(), lo.raw(), 1, MPFR_RNDD);
    if (lo.sign() <= 0) {
        throw NumericFailure("HPValue::log1p: interval of 1+x not strictly positive");
    }
    Real val(x.prec());
    int t = mpfr_log1p(val.raw(), x.v_.raw(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    mpfr_div(rad.raw(), x.r_.raw(), lo.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), x.rig_);
}

HPValue HPValue::exp(const HPValue& x) {
    Real val(x.prec());
    int t = mpfr_exp(val.raw(), x.v_.raw(), MPFR_RNDN);
    // |e^{x_t} - e^{xv}| <= e^{xv} (e^{rx} - 1)
    Real grow(kRadiusPrec);
    mpfr_expm1(grow.raw(), x.r_.raw(), MPFR_RNDU);
    Real rad(kRadiusPrec);
    mpfr_mul(rad.raw(), rad_abs_up(val).raw(), grow.raw(), MPFR_RNDU);
    rad_slack(rad);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), x.rig_);
}

HPValue HPValue::pow_ui(unsigned long e) const {
    HPValue acc = from_long(1, prec());
    HPValue base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

HPValue HPValue::abs() const {
    Real val(prec());
    mpfr_abs(val.raw(), v_.raw(), MPFR_RNDN);  // exact
    return HPValue(std::move(val), r_, rig_);
}

HPValue HPValue::mul_q(const BigRational& q) const {
    Real val(prec());
    int t = mpfr_mul_q(val.raw(), v_.raw(), q.backend().data(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    Real qmag = Real::of_rational(boost::multiprecision::abs(q), kRadiusPrec, MPFR_RNDU);
    mpfr_mul(rad.raw(), r_.raw(), qmag.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::mul_z(const BigInt& z) const {
    Real val(prec());
    int t = mpfr_mul_z(val.raw(), v_.raw(), z.backend().data(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    Real zmag = Real::of_bigint(boost::multiprecision::abs(z), kRadiusPrec, MPFR_RNDU);
    mpfr_mul(rad.raw(), r_.raw(), zmag.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::mul_ui(unsigned long u) const {
    Real val(prec());
    int t = mpfr_mul_ui(val.raw(), v_.raw(), u, MPFR_RNDN);
    Real rad(kRadiusPrec);
    mpfr_mul_ui(rad.raw(), r_.raw(), u, MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::div_ui(unsigned long u) const {
    if (u == 0) throw std::invalid_argument("HPValue::div_ui: division by zero");
    Real val(prec());
    int t = mpfr_div_ui(val.raw(), v_.raw(), u, MPFR_RNDN);
    Real rad(kRadiusPrec);
    mpfr_div_ui(rad.raw(), r_.raw(), u, MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::add_ui(unsigned long u) const {
    Real val(prec());
    int t = mpfr_add_ui(val.raw(), v_.raw(), u, MPFR_RNDN);
    Real rad = r_;
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::sub_ui(unsigned long u) const {
    Real val(prec());
    int t = mpfr_sub_ui(val.raw(), v_.raw(), u, MPFR_RNDN);
    Real rad = r_;
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::add_q(const BigRational& q) const {
    Real val(prec());
    int t = mpfr_add_q(val.raw(), v_.raw(), q.backend().data(), MPFR_RNDN);
    Real rad = r_;
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

HPValue HPValue::mul_real(const Real& w) const {
    Real val(std::max(prec(), w.prec()));
    int t = mpfr_mul(val.raw(), v_.raw(), w.raw(), MPFR_RNDN);
    Real rad(kRadiusPrec);
    mpfr_mul(rad.raw(), r_.raw(), rad_abs_up(w).raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(rad, val);
    return HPValue(std::move(val), std::move(rad), rig_);
}

Real HPValue::lower() const {
    Real out(prec());
    mpfr_sub(out.raw(), v_.raw(), r_.raw(), MPFR_RNDD);
    return out;
}

Real HPValue::upper() const {
    Real out(prec());
    mpfr_add(out.raw(), v_.raw(), r_.raw(), MPFR_RNDU);
    return out;
}

Real HPValue::abs_upper() const {
    Real out = rad_abs_up(v_);
    mpfr_add(out.raw(), out.raw(), r_.raw(), MPFR_RNDU);
    return out;
}

bool HPValue::contains_zero() const {
    return lower().sign() <= 0 && upper().sign() >= 0;
}

bool HPValue::overlaps(const HPValue& o) const {
    Real d(kRadiusPrec);
    mpfr_sub(d.raw(), v_.raw(), o.v_.raw(), MPFR_RNDA);
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
    Real rsum(kRadiusPrec);
    mpfr_add(rsum.raw(), r_.raw(), o.r_.raw(), MPFR_RNDD);
    return d <= rsum;
}

Real HPValue::separation(const HPValue& a, const HPValue& b) {
    Real d(kRadiusPrec);
    mpfr_sub(d.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDA);
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
    mpfr_sub(d.raw(), d.raw(), a.r_.raw(), MPFR_RNDU);
    mpfr_sub(d.raw(), d.raw(), b.r_.raw(), MPFR_RNDU);
    if (d.sign() < 0) {
        mpfr_set_zero(d.raw(), 1);
    }
    return d;
}

Real HPValue::separation_inflated(const HPValue& a, const HPValue& b, double factor) {
    HPValue ai = a.rig_ == Rigor::heuristic ? a.inflated(factor) : a;
    HPValue bi = b.rig_ == Rigor::heuristic ? b.inflated(factor) : b;
    return separation(ai, bi);
}

bool HPValue::contains_rational(const BigRational& q) const {
    Real d(prec() + 64);
    int t = mpfr_sub_q(d.raw(), v_.raw(), q.backend().data(), MPFR_RNDN);
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
    Real dup(kRadiusPrec);
    mpfr_set(dup.raw(), d.raw(), MPFR_RNDU);
    if (t != 0) rad_add_ulp(dup, d);
    return dup <= r_;
}

std::optional<FloorSplit> HPValue::certified_floor_split() const {
    Real lo = lower();
    Real hi = upper();
    Real flo(prec());
    Real fhi(prec());
    mpfr_floor(flo.raw(), lo.raw());
    mpfr_floor(fhi.raw(), hi.raw());
    if (mpfr_cmp(flo.raw(), fhi.raw()) != 0) {
        return std::nullopt;
    }
    BigInt f;
    mpfr_get_z(f.backend().data(), flo.raw(), MPFR_RNDZ);
    Real val(prec());
    int t = mpfr_sub_z(val.raw(), v_.raw(), f.backend().data(), MPFR_RNDN);
    Real rad = r_;
    if (t != 0) rad_add_ulp(rad, val);
    return FloorSplit{std::move(f), HPValue(std::move(val), std::move(rad), rig_)};
}

HPValue HPValue::with_extra_radius(const Real& extra) const {
    if (extra.sign() < 0) {
        throw std::invalid_argument("with_extra_radius: negative radius increment");
    }
    Real rad(kRadiusPrec);
    mpfr_add(rad.raw(), r_.raw(), extra.raw(), MPFR_RNDU);
    return HPValue(v_, std::move(rad), rig_);
}

HPValue HPValue::with_rigor(Rigor r) const {
    return HPValue(v_, r_, r);
}

HPValue HPValue::inflated(double factor) const {
    Real rad(kRadiusPrec);
    mpfr_mul_d(rad.raw(), r_.raw(), factor, MPFR_RNDU);
    return HPValue(v_, std::move(rad), rig_);
}

HPValue HPValue::sum(std::span<const HPValue> xs, mpfr_prec_t prec) {
    HPValue acc = zero(prec);
    for (const HPValue& x : xs) {
        acc += x;
    }
    return acc;
}

}  // namespace gamma_forms
