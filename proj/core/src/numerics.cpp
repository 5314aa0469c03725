#include "gamma_forms/numerics.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>

namespace gamma_forms {

namespace detail {
// Defined in gamma_digits.cpp.
extern const char* const kGammaDigits;
}  // namespace detail

HPValue log_factored(const FactoredInteger& f, mpfr_prec_t precision) {
    f.validate();
    const mpfr_prec_t wp = precision + 32;
    HPValue total = HPValue::zero(wp);
    for (const auto& [base, exponent] : f.factors) {
        if (base == 1) {
            continue;  // log 1 = 0
        }
        HPValue lb = HPValue::log(HPValue::from_bigint(base, wp));
        total += lb.mul_z(exponent);
    }
    return total;
}

namespace {

struct GammaTable {
    std::string digits;      // "0.5772..."
    long frac_digits = 0;    // digits after the decimal point
    mpfr_prec_t capacity = 0;
};

GammaTable load_table() {
    GammaTable t;
    if (const char* path = std::getenv("GAMMA_FORMS_DIGITS_PATH"); path != nullptr && *path != '\0') {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument(std::string("gamma_reference: cannot open digits file ") + path);
        }
        std::getline(in, t.digits);
    } else {
        t.digits = detail::kGammaDigits;
    }
    if (t.digits.rfind("0.", 0) != 0 || t.digits.size() < 12) {
        throw std::invalid_argument("gamma_reference: digits must start with \"0.\" and carry enough digits");
    }
    for (std::size_t i = 2; i < t.digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t.digits[i]))) {
            throw std::invalid_argument("gamma_reference: digits file contains a non-digit character");
        }
    }
    t.frac_digits = static_cast<long>(t.digits.size()) - 2;
    // Table error is one unit in the last place, 10^-frac_digits; leave a few
    // guard bits so a capacity-sized request still gets a radius below 2^-prec.
    t.capacity = static_cast<mpfr_prec_t>(std::floor(static_cast<double>(t.frac_digits) * std::log2(10.0))) - 4;
    return t;
}

const GammaTable& table() {
    static const GammaTable t = load_table();
    return t;
}

}  // namespace

const std::string& gamma_reference_digits() { return table().digits; }

mpfr_prec_t gamma_reference_capacity() { return table().capacity; }

HPValue gamma_reference(mpfr_prec_t precision) {
    const GammaTable& t = table();
    if (precision > t.capacity) {
        throw std::invalid_argument("gamma_reference: requested precision exceeds digit table capacity (" +
                                    std::to_string(t.capacity) + " bits)");
    }
    const mpfr_prec_t wp = precision + 32;
    Real v = Real::from_string(t.digits, wp);
    // one unit in the table's last place, plus the parse rounding ulp
    Real rad(HPValue::kRadiusPrec);
    Real unit(HPValue::kRadiusPrec);
    mpfr_set_ui(unit.raw(), 10, MPFR_RNDU);
    mpfr_pow_si(unit.raw(), unit.raw(), -t.frac_digits, MPFR_RNDU);
    mpfr_add(rad.raw(), rad.raw(), unit.raw(), MPFR_RNDU);
    Real parse_ulp = Real::pow2(static_cast<long>(mpfr_get_exp(v.raw())) - static_cast<long>(wp), HPValue::kRadiusPrec);
    mpfr_add(rad.raw(), rad.raw(), parse_ulp.raw(), MPFR_RNDU);
    return HPValue(std::move(v), std::move(rad), Rigor::rigorous);
}

}  // namespace gamma_forms
