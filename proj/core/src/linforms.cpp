#include "gamma_forms/linforms.hpp"

#include <algorithm>

namespace gamma_forms {

PartialFraction decompose_Rn(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("decompose_Rn: n must be >= 1");
    }
    std::vector<BigRational> hcache(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        hcache[k] = harmonic(k);
    }
    PartialFraction pf;
    pf.n = n;
    pf.b2.resize(n + 1);
    pf.b1.resize(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const BigInt c = binomial(n, k);
        const BigRational c2 = BigRational(c * c);
        pf.b2[k] = c2;
        pf.b1[k] = 2 * c2 * (hcache[k] - hcache[n - k]);
    }
    return pf;
}

bool validate_asymptotic(const PartialFraction& pf) {
    if (pf.b1.size() != pf.n + 1 || pf.b2.size() != pf.n + 1) {
        throw std::invalid_argument("PartialFraction: coefficient lists must have length n+1");
    }
    BigRational s1 = 0;
    BigRational s2 = 0;
    for (unsigned k = 0; k <= pf.n; ++k) {
        s1 += pf.b1[k];
        s2 += pf.b2[k] - BigRational(k) * pf.b1[k];
    }
    return s1 == 0 && s2 == 0;
}

LinearForm build_linear_form(const PartialFraction& pf) {
    if (!validate_asymptotic(pf)) {
        throw std::invalid_argument("build_linear_form: partial fraction is not asymptotically valid");
    }
    LinearForm lf;
    lf.n = pf.n;
    lf.gamma_coeff = 0;
    lf.constant = 0;
    for (unsigned k = 0; k <= pf.n; ++k) {
        lf.gamma_coeff += pf.b2[k];
        lf.constant += pf.b2[k] * harmonic(pf.n + k);
    }
    lf.log_coeffs.resize(pf.n);
    for (unsigned m = 1; m <= pf.n; ++m) {
        BigRational c = 0;
        for (unsigned k = m; k <= pf.n; ++k) {
            c += pf.b1[k];
        }
        lf.log_coeffs[m - 1] = c;
    }
    return lf;
}

LinearForm closed_form_Ln_An(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("closed_form_Ln_An: n must be >= 1");
    }
    LinearForm lf;
    lf.n = n;
    lf.gamma_coeff = BigRational(binomial(2 * n, n));
    lf.constant = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const BigInt c = binomial(n, k);
        lf.constant += BigRational(c * c) * harmonic(n + k);
    }
    lf.log_coeffs.resize(n);
    for (unsigned m = 1; m <= n; ++m) {
        BigRational cm = 0;
        for (unsigned k = 0; k <= std::min(m - 1, n - m); ++k) {
            const BigInt c = binomial(n, k);
            BigRational inner = 0;
            for (unsigned j = k + 1; j <= n - k; ++j) {
                inner += BigRational(2, j);
            }
            cm += BigRational(c * c) * inner;
        }
        lf.log_coeffs[m - 1] = cm;
    }
    return lf;
}

InnerIntegral inner_integral_closed(const PartialFraction& pf, std::uint64_t nu) {
    if (!validate_asymptotic(pf)) {
        throw std::invalid_argument("inner_integral_closed: partial fraction is not asymptotically valid");
    }
    if (nu <= pf.n) {
        throw std::invalid_argument("inner_integral_closed: requires nu >= n+1");
    }
    InnerIntegral out;
    out.rational_part = 0;
    for (unsigned k = 0; k <= pf.n; ++k) {
        out.rational_part += pf.b2[k] / BigRational(nu + k);
        if (pf.b1[k] != 0) {
            out.log_terms.emplace_back(nu + k, -pf.b1[k]);
        }
    }
    return out;
}

InclusionReport check_inclusion(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("check_inclusion: n must be >= 1");
    }
    const LinearForm lf = closed_form_Ln_An(n);
    InclusionReport rep;
    rep.n = n;
    rep.d2n = lcm_upto(2 * n);
    rep.d2n_binom = rep.d2n * binomial(2 * n, n);

    const BigRational scaled_a = BigRational(rep.d2n) * lf.constant;
    rep.a_integral = denominator(scaled_a) == 1;
    if (rep.a_integral) {
        rep.d2n_A = numerator(scaled_a);
    }

    rep.logcoeffs_integral = true;
    for (const BigRational& c : lf.log_coeffs) {
        const BigRational scaled = BigRational(rep.d2n) * c;
        if (denominator(scaled) != 1) {
            rep.logcoeffs_integral = false;
            break;
        }
        rep.d2n_logcoeffs.push_back(numerator(scaled));
    }
    if (!rep.logcoeffs_integral) {
        rep.d2n_logcoeffs.clear();
    }
    return rep;
}

}  // namespace gamma_forms
