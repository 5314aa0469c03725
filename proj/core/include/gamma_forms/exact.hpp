#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gamma_forms {

// Exact arbitrary-precision integers and rationals (GMP-backed).
// BigRational is always in lowest terms with a positive denominator; every
// operation in this module is exact, nothing here rounds.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// An integer kept in factored form: strictly increasing positive bases with
// non-negative exponents. The empty list represents 1. Values of this kind
// (S_n in particular) are astronomically large, so no expansion to a single
// integer is offered; downstream consumers only ever need
// log F = sum e_i * log(base_i).
struct FactoredInteger {
    std::vector<std::pair<BigInt, BigInt>> factors;

    bool is_one() const { return factors.empty(); }
    void validate() const;
};

// d_n = LCM(1, ..., n), by an iterated gcd-based LCM fold. Rejects n = 0.
BigInt lcm_upto(unsigned n);

// H_N = sum_{k=1}^{N} 1/k, exactly; harmonic(0) = 0.
BigRational harmonic(unsigned N);

// Exact binomial coefficient via the multiplicative formula. Rejects k > n.
BigInt binomial(unsigned n, unsigned k);

// S_n as factors (n+m, e_m) for m = 1..n, where
//   e_m = sum_{k=0}^{min(m-1,n-m)} C(n,k)^2 * sum_{j=k+1}^{n-k} 2*d_{2n}/j.
// Every d_{2n}/j is an exact integer division (j <= n <= 2n). Rejects n = 0.
FactoredInteger s_n_factored(unsigned n);

}  // namespace gamma_forms
