#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gamma_forms/hypergeometric.hpp"
#include "gamma_forms/linforms.hpp"

namespace gamma_forms {

struct IdentityCheck {
    std::string name;
    bool pass = false;
    // Interval separation of the two sides (0 when the enclosures overlap).
    double gap = 0.0;
};

// Seeded positive parameter sets inside thomae_check's supported domain:
// margin s in [1/2, 5], b and d-a small positive integers, e-a > 0.
std::vector<HypergeometricParams> seeded_thomae_params(std::size_t count, std::uint64_t seed, mpfr_prec_t prec);

// Random integer coefficient table (entries in [-5, 5], n <= n_max) with
// B_01 and B_02 adjusted so both asymptotic relations hold exactly.
PartialFraction seeded_partial_fraction(std::mt19937_64& rng, unsigned n_max);

// Sums the series of inner integrals for pf up to V with the rigorous signed
// tail bound (sum|B_k2| k + sum|B_k1| k^2/2)/V, then asks whether it brackets
// the linear-form value B*gamma_ref + L - A.
struct Prop1OracleCheck {
    unsigned n = 0;
    bool brackets = false;
    double gap = 0.0;
    HPValue series;
    HPValue linear_form_value;
};
Prop1OracleCheck prop1_oracle_check(const PartialFraction& pf, mpfr_prec_t precision, std::uint64_t V);

// The full named suite: the transformation identity on the integrand's own
// parameter family and on seeded random sets, the Beta-integral identity grid,
// the index-shift check, and the linear-form oracle equivalence.
std::vector<IdentityCheck> run_identity_checks(unsigned n_max, std::uint64_t seed, mpfr_prec_t precision);

}  // namespace gamma_forms
