#pragma once

#include <mpfr.h>

#include <string>

#include "gamma_forms/exact.hpp"

namespace gamma_forms {

// RAII wrapper around a single mpfr_t. Precision is fixed per value, in bits;
// rounding is always explicit at the call site. This is deliberately thin:
// the interval layer (HPValue) does the arithmetic through raw() with the
// rounding mode it needs.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) {
            mpfr_swap(x_, o.x_);
        }
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    static Real of_long(long v, mpfr_prec_t prec);
    static Real of_bigint(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real of_rational(const BigRational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real of_double(double v, mpfr_prec_t prec);
    // 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec = 64);
    static Real from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }
    bool operator==(const Real& o) const { return cmp(o) == 0; }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(x_, rnd); }

    // Scientific decimal form "d.ddd...e<exp>". digits == 0 asks mpfr for the
    // minimal digit count that round-trips exactly at this precision.
    std::string to_string(std::size_t digits = 0) const;

private:
    mpfr_t x_;
};

}  // namespace gamma_forms
