#include "gamma_forms/real.hpp"

#include <stdexcept>

namespace gamma_forms {

Real Real::of_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::of_bigint(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_z(r.x_, v.backend().data(), rnd);
    return r;
}

Real Real::of_rational(const BigRational& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.x_, v.backend().data(), rnd);
    return r;
}

Real Real::of_double(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, rnd) != 0) {
        throw std::invalid_argument("Real::from_string: unparsable value '" + s + "'");
    }
    return r;
}

std::string Real::to_string(std::size_t digits) const {
    if (mpfr_nan_p(x_)) {
        return "nan";
    }
    if (mpfr_inf_p(x_)) {
        return mpfr_sgn(x_) < 0 ? "-inf" : "inf";
    }
    if (mpfr_zero_p(x_)) {
        return "0";
    }
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);

    std::string out;
    std::size_t i = 0;
    if (m[0] == '-') {
        out += '-';
        i = 1;
    }
    out += m[i];
    if (m.size() > i + 1) {
        out += '.';
        out += m.substr(i + 1);
    }
    out += 'e';
    out += std::to_string(static_cast<long>(e - 1));
    return out;
}

}  // namespace gamma_forms
