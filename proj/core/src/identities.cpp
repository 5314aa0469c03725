#include "gamma_forms/identities.hpp"

#include <algorithm>

#include "gamma_forms/numerics.hpp"
#include "gamma_forms/quadrature.hpp"
#include "gamma_forms/representations.hpp"

namespace gamma_forms {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

double separation_double(const HPValue& a, const HPValue& b) {
    return HPValue::separation(a, b).to_double(MPFR_RNDU);
}

}  // namespace

std::vector<HypergeometricParams> seeded_thomae_params(std::size_t count, std::uint64_t seed, mpfr_prec_t prec) {
    std::mt19937_64 rng(seed);
    std::vector<HypergeometricParams> out;
    while (out.size() < count) {
        const BigRational a(draw(rng, 5, 24), 8);
        const BigRational c(draw(rng, 5, 24), 8);
        const BigRational b(draw(rng, 1, 3));
        const BigRational p(draw(rng, 1, 3));
        const BigRational s(draw(rng, 4, 40), 8);
        const BigRational d = a + p;
        const BigRational e = s + b + c - p;  // gives margin d+e-a-b-c = s
        if (e - a <= 0) {
            continue;
        }
        out.push_back(HypergeometricParams::from_rationals(a, b, c, d, e, prec));
    }
    return out;
}

PartialFraction seeded_partial_fraction(std::mt19937_64& rng, unsigned n_max) {
    const unsigned n = static_cast<unsigned>(draw(rng, 1, n_max));
    PartialFraction pf;
    pf.n = n;
    pf.b1.assign(n + 1, BigRational(0));
    pf.b2.assign(n + 1, BigRational(0));
    for (unsigned k = 1; k <= n; ++k) {
        pf.b1[k] = BigRational(static_cast<long>(draw(rng, 0, 10)) - 5);
        pf.b2[k] = BigRational(static_cast<long>(draw(rng, 0, 10)) - 5);
    }
    // Pin the k = 0 entries so sum B_k1 = 0 and sum (B_k2 - k B_k1) = 0.
    BigRational s1 = 0;
    BigRational s2 = 0;
    for (unsigned k = 1; k <= n; ++k) {
        s1 += pf.b1[k];
        s2 += pf.b2[k] - BigRational(k) * pf.b1[k];
    }
    pf.b1[0] = -s1;
    pf.b2[0] = -s2;
    return pf;
}

Prop1OracleCheck prop1_oracle_check(const PartialFraction& pf, mpfr_prec_t precision, std::uint64_t V) {
    const mpfr_prec_t wp = precision + 32;
    const LinearForm lf = build_linear_form(pf);

    Prop1OracleCheck out;
    out.n = pf.n;

    HPValue lfv = gamma_reference(std::min<mpfr_prec_t>(precision, gamma_reference_capacity())).mul_q(lf.gamma_coeff);
    for (unsigned m = 1; m <= lf.n; ++m) {
        if (lf.log_coeffs[m - 1] != 0) {
            lfv += HPValue::log(HPValue::from_long(lf.n + m, wp)).mul_q(lf.log_coeffs[m - 1]);
        }
    }
    lfv -= HPValue::from_rational(lf.constant, wp);
    out.linear_form_value = std::move(lfv);

    // |int_nu^inf R| <= (sum_k |B_k2| k + sum_k |B_k1| k^2/2) / nu^2 once the
    // two asymptotic relations hold, so the tail past V is at most C/V.
    BigRational c_pf = 0;
    for (unsigned k = 0; k <= pf.n; ++k) {
        c_pf += boost::multiprecision::abs(pf.b2[k]) * BigRational(k);
        c_pf += boost::multiprecision::abs(pf.b1[k]) * BigRational(k) * BigRational(k) / 2;
    }
    HPValue series = series_partial_sum(pf, V, precision);
    series = series.with_extra_radius(Real::of_rational(c_pf / BigRational(V), 64, MPFR_RNDU));
    out.series = std::move(series);

    out.brackets = out.series.overlaps(out.linear_form_value);
    out.gap = separation_double(out.series, out.linear_form_value);
    return out;
}

std::vector<IdentityCheck> run_identity_checks(unsigned n_max, std::uint64_t seed, mpfr_prec_t precision) {
    if (n_max == 0) {
        throw std::invalid_argument("run_identity_checks: n_max must be >= 1");
    }
    std::vector<IdentityCheck> checks;

    // The transformation identity on the integrand's own parameter family.
    for (unsigned n = 1; n <= std::min(n_max, 3u); ++n) {
        for (int half_extra : {0, 3}) {  // t = n+1 and t = n+2.5
            const BigRational t = BigRational(n + 1) + BigRational(half_extra, 2);
            const BigRational e = BigRational(2 * n + 1) + t;
            HypergeometricParams p = HypergeometricParams::from_rationals(
                BigRational(n + 1), BigRational(n + 1), BigRational(2 * n + 1), BigRational(2 * n + 2), e,
                precision + 32);
            ThomaeReport rep = thomae_check(p, precision);
            IdentityCheck c;
            c.name = "thomae_integrand_n" + std::to_string(n) + (half_extra == 0 ? "_t_n+1" : "_t_n+2.5");
            c.pass = rep.agree;
            c.gap = separation_double(rep.lhs, rep.rhs);
            checks.push_back(std::move(c));
        }
    }

    // Seeded random parameter sets.
    const auto random_sets = seeded_thomae_params(25, seed, precision + 32);
    for (std::size_t i = 0; i < random_sets.size(); ++i) {
        ThomaeReport rep = thomae_check(random_sets[i], precision);
        IdentityCheck c;
        c.name = "thomae_random_" + std::to_string(i);
        c.pass = rep.agree;
        c.gap = separation_double(rep.lhs, rep.rhs);
        checks.push_back(std::move(c));
    }

    // Beta integral identity.
    for (unsigned n = 1; n <= std::min(n_max, 4u); ++n) {
        for (const BigRational& t : {BigRational(1, 2), BigRational(1), BigRational(5, 2)}) {
            BetaIntegralCheck rep = beta_integral_check(n, HPValue::from_rational(t, precision + 32), precision);
            IdentityCheck c;
            c.name = "beta_integral_n" + std::to_string(n) + "_t" + t.str();
            c.pass = rep.agree;
            c.gap = separation_double(rep.numeric, rep.closed);
            checks.push_back(std::move(c));
        }
    }

    // Index shift between the two series of tail integrals.
    for (unsigned n = 1; n <= std::min(n_max, 3u); ++n) {
        IdentityCheck c;
        c.name = "index_shift_n" + std::to_string(n);
        c.pass = appendix_index_shift_check(n, std::min<mpfr_prec_t>(precision, 128));
        c.gap = 0.0;
        checks.push_back(std::move(c));
    }

    // Linear-form construction vs direct series summation on seeded tables.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (unsigned i = 0; i < 20; ++i) {
        PartialFraction pf = seeded_partial_fraction(rng, 4);
        Prop1OracleCheck rep = prop1_oracle_check(pf, precision, 200000);
        IdentityCheck c;
        c.name = "linear_form_oracle_" + std::to_string(i) + "_n" + std::to_string(pf.n);
        c.pass = rep.brackets;
        c.gap = rep.gap;
        checks.push_back(std::move(c));
    }

    return checks;
}

}  // namespace gamma_forms
