#pragma once

#include <optional>
#include <span>
#include <string>

#include "gamma_forms/exact.hpp"
#include "gamma_forms/real.hpp"

namespace gamma_forms {

// Numeric failure distinct from precondition violations: precision exhaustion,
// quadrature that cannot converge, tail bounds that never drop below target.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Rigor { rigorous, heuristic };

inline const char* rigor_name(Rigor r) { return r == Rigor::rigorous ? "rigorous" : "heuristic"; }

class HPValue;

// Result of a certified floor: the integer part and the exact remainder ball.
struct FloorSplit;

// Arbitrary-precision value with an attached error radius (a ball).
//
// Invariant: when rigor() == rigorous, the true mathematical quantity lies in
// [value - radius, value + radius]. Every operation propagates radii
// conservatively: inputs' radii are combined through first-order bounds with
// outward rounding (radius arithmetic always rounds up), and one ulp of the
// result is added whenever the value rounding was inexact. Heuristic values
// carry estimated radii (quadrature error estimates); rigor is sticky —
// combining anything heuristic yields a heuristic result.
class HPValue {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 64;

    HPValue() : HPValue(Real(64), Real(kRadiusPrec), Rigor::rigorous) {}
    HPValue(Real value, Real radius, Rigor rigor);

    static HPValue zero(mpfr_prec_t prec);
    static HPValue from_long(long v, mpfr_prec_t prec);
    static HPValue from_bigint(const BigInt& v, mpfr_prec_t prec);
    static HPValue from_rational(const BigRational& v, mpfr_prec_t prec);
    // Takes the Real as exact (radius 0).
    static HPValue from_real(Real v, Rigor rigor = Rigor::rigorous);
    // 1/m with one-ulp radius.
    static HPValue one_over_ui(unsigned long m, mpfr_prec_t prec);

    const Real& value() const { return v_; }
    const Real& radius() const { return r_; }
    Rigor rigor() const { return rig_; }
    mpfr_prec_t prec() const { return v_.prec(); }

    friend HPValue operator+(const HPValue& a, const HPValue& b);
    friend HPValue operator-(const HPValue& a, const HPValue& b);
    friend HPValue operator*(const HPValue& a, const HPValue& b);
    friend HPValue operator/(const HPValue& a, const HPValue& b);
    HPValue operator-() const;
    HPValue& operator+=(const HPValue& o) { return *this = *this + o; }
    HPValue& operator-=(const HPValue& o) { return *this = *this - o; }
    HPValue& operator*=(const HPValue& o) { return *this = *this * o; }
    HPValue& operator/=(const HPValue& o) { return *this = *this / o; }

    // Natural log; the whole interval must be positive.
    static HPValue log(const HPValue& x);
    // log(1+x); the interval of 1+x must be positive.
    static HPValue log1p(const HPValue& x);
    static HPValue exp(const HPValue& x);
    HPValue pow_ui(unsigned long e) const;
    HPValue abs() const;

    // Exact-scalar variants (the scalar carries no radius).
    HPValue mul_q(const BigRational& q) const;
    HPValue mul_z(const BigInt& z) const;
    HPValue mul_ui(unsigned long u) const;
    HPValue div_ui(unsigned long u) const;
    HPValue add_ui(unsigned long u) const;
    HPValue sub_ui(unsigned long u) const;
    HPValue add_q(const BigRational& q) const;
    // Multiply by a Real treated as exact (quadrature weights).
    HPValue mul_real(const Real& w) const;

    // Interval endpoints, rounded outward.
    Real lower() const;
    Real upper() const;
    // Upper bound on |value| + radius.
    Real abs_upper() const;

    bool definitely_positive() const { return lower().sign() > 0; }
    bool contains_zero() const;
    bool overlaps(const HPValue& o) const;
    // Interval separation max(0, |va - vb| - ra - rb); 0 when the balls touch.
    static Real separation(const HPValue& a, const HPValue& b);
    // Separation with each *heuristic* operand's radius inflated by `factor`.
    static Real separation_inflated(const HPValue& a, const HPValue& b, double factor);
    bool contains_rational(const BigRational& q) const;

    // Certified floor: succeeds only when the interval contains no integer
    // boundary ambiguity, i.e. floor(lower) == floor(upper).
    std::optional<FloorSplit> certified_floor_split() const;

    HPValue with_extra_radius(const Real& extra) const;
    HPValue with_rigor(Rigor r) const;
    HPValue inflated(double factor) const;

    // Decimal strings. digits == 0: minimal exact round-trip digit count.
    std::string value_string(std::size_t digits = 0) const { return v_.to_string(digits); }
    std::string radius_string() const { return r_.to_string(3); }

    // Deterministic left-to-right sum.
    static HPValue sum(std::span<const HPValue> xs, mpfr_prec_t prec);

private:
    Real v_;
    Real r_;
    Rigor rig_;
};

struct FloorSplit {
    BigInt floor;
    HPValue frac;
};

}  // namespace gamma_forms
