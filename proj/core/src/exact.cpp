#include "gamma_forms/exact.hpp"

namespace gamma_forms {

void FactoredInteger::validate() const {
    BigInt prev = 0;
    for (const auto& [base, exponent] : factors) {
        if (base <= prev) {
            throw std::invalid_argument("FactoredInteger: bases must be strictly increasing and positive");
        }
        if (exponent < 0) {
            throw std::invalid_argument("FactoredInteger: exponents must be non-negative");
        }
        prev = base;
    }
}

BigInt lcm_upto(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("lcm_upto: n must be >= 1");
    }
    BigInt acc = 1;
    for (unsigned j = 2; j <= n; ++j) {
        acc = boost::multiprecision::lcm(acc, BigInt(j));
    }
    return acc;
}

BigRational harmonic(unsigned N) {
    BigRational sum = 0;
    for (unsigned k = 1; k <= N; ++k) {
        sum += BigRational(1, k);
    }
    return sum;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        throw std::invalid_argument("binomial: requires k <= n");
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step: acc is C(n-k+i, i) * i! / i!
    }
    return acc;
}

FactoredInteger s_n_factored(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("s_n_factored: n must be >= 1");
    }
    const BigInt d2n = lcm_upto(2 * n);
    FactoredInteger result;
    result.factors.reserve(n);
    for (unsigned m = 1; m <= n; ++m) {
        const unsigned k_max = std::min(m - 1, n - m);
        BigInt e_m = 0;
        for (unsigned k = 0; k <= k_max; ++k) {
            const BigInt weight = binomial(n, k) * binomial(n, k);
            BigInt inner = 0;
            for (unsigned j = k + 1; j <= n - k; ++j) {
                BigInt q = d2n / j;
                if (q * j != d2n) {
                    throw std::logic_error("s_n_factored: d_{2n} not divisible by j");
                }
                inner += 2 * q;
            }
            e_m += weight * inner;
        }
        result.factors.emplace_back(BigInt(n + m), e_m);
    }
    result.validate();
    return result;
}

}  // namespace gamma_forms
