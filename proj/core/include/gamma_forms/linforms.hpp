#pragma once

#include <cstdint>
#include <vector>

#include "gamma_forms/exact.hpp"

namespace gamma_forms {

// Coefficient table {B_k2, B_k1}, k = 0..n, of a rational function
//   R(t) = sum_k ( B_k2/(t+k)^2 + B_k1/(t+k) ),
// restricted to rational coefficients.
struct PartialFraction {
    unsigned n = 0;
    std::vector<BigRational> b2;  // length n+1
    std::vector<BigRational> b1;  // length n+1
};

// Exact triple (B, {c_m}, A) representing B*gamma + sum_m c_m*log(n+m) - A.
struct LinearForm {
    unsigned n = 0;
    BigRational gamma_coeff;              // B
    std::vector<BigRational> log_coeffs;  // c_m for m = 1..n
    BigRational constant;                 // A
};

// Partial fractions of R_n(t) = (n!/(t(t+1)...(t+n)))^2:
//   B_k2 = C(n,k)^2,  B_k1 = 2 C(n,k)^2 (H_k - H_{n-k}).
PartialFraction decompose_Rn(unsigned n);

// True iff sum_k B_k1 = 0 and sum_k (B_k2 - k B_k1) = 0 (exact checks);
// equivalent to R(t) = O(t^-3) as t -> infinity for this shape.
bool validate_asymptotic(const PartialFraction& pf);

// B = sum B_k2, c_m = sum_{k=m}^{n} B_k1, A = sum B_k2 H_{n+k}.
// Requires validate_asymptotic(pf); the series construction diverges otherwise.
LinearForm build_linear_form(const PartialFraction& pf);

// L_n and A_n straight from the closed triple/double sums:
//   c_m = sum_{k=0}^{min(m-1,n-m)} C(n,k)^2 sum_{j=k+1}^{n-k} 2/j,
//   A_n = sum_k C(n,k)^2 H_{n+k},  B = C(2n,n).
// Independent of decompose_Rn.
LinearForm closed_form_Ln_An(unsigned n);

// Exact value of int_nu^inf R(t) dt as a rational plus rational multiples of
// logs of integers:
//   sum_k ( B_k2/(nu+k) - B_k1 log(nu+k) ).
// Valid for nu > n (the poles of R lie in [-n, 0]).
struct InnerIntegral {
    BigRational rational_part;
    // (argument nu+k, coefficient -B_k1); exact-zero coefficients are dropped.
    std::vector<std::pair<std::uint64_t, BigRational>> log_terms;
};
InnerIntegral inner_integral_closed(const PartialFraction& pf, std::uint64_t nu);

// Exact integrality of the scaled linear form: d_2n * A_n and every
// d_2n * c_m must be integers (the scaled log coefficients equal the S_n
// exponents). A false flag is a finding, not an error.
struct InclusionReport {
    unsigned n = 0;
    BigInt d2n;
    bool a_integral = false;
    BigInt d2n_A;  // valid when a_integral
    bool logcoeffs_integral = false;
    std::vector<BigInt> d2n_logcoeffs;  // valid when logcoeffs_integral
    BigInt d2n_binom;                   // d_2n * C(2n,n), trivially integral
};
InclusionReport check_inclusion(unsigned n);

}  // namespace gamma_forms
