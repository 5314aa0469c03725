#pragma once

#include "gamma_forms/exact.hpp"
#include "gamma_forms/hp_value.hpp"

namespace gamma_forms {

// sum e_i * log(base_i) with rigorous rounding tracking. Empty input -> 0.
HPValue log_factored(const FactoredInteger& f, mpfr_prec_t precision);

// Euler's constant from the embedded digit table (a vendored data asset,
// cross-checked in the test suite by an independent Euler-Maclaurin oracle;
// never computed at runtime). The environment variable
// GAMMA_FORMS_DIGITS_PATH overrides the table with a digits file whose first
// line is "0.5772156649..." (decimal digits only).
//
// Rejects precision requests beyond the table's capacity.
HPValue gamma_reference(mpfr_prec_t precision);

// Largest precision (bits) gamma_reference can serve from the active table.
mpfr_prec_t gamma_reference_capacity();

// The active digit string ("0.5772..."), embedded or overridden.
const std::string& gamma_reference_digits();

}  // namespace gamma_forms
