#include "eisrel/number_theory.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace eisrel {

Rational bernoulli(unsigned n) {
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};

    const std::scoped_lock lock(mutex);
    while (cache.size() <= n) {
        // B_m is pinned by sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1,
        // i.e. (m+1) B_m = -sum_{j<m} C(m+1, j) B_j.
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational acc;
        for (unsigned j = 0; j < m; ++j) {
            if (!cache[j].is_zero()) {
                acc += Rational(binomial(m + 1, j)) * cache[j];
            }
        }
        cache.push_back(-acc / Rational(Integer(m) + 1));
    }
    return cache[n];
}

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial: negative row index");
    }
    if (k < 0 || k > n) {
        return Integer(0);
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer sigma(unsigned k, unsigned long n) {
    if (n == 0) {
        throw std::domain_error("sigma: n must be positive");
    }
    Integer total(0);
    Integer power;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(power.get_mpz_t(), d, k);
        total += power;
        const unsigned long paired = n / d;
        if (paired != d) {
            mpz_ui_pow_ui(power.get_mpz_t(), paired, k);
            total += power;
        }
    }
    return total;
}

}  // namespace eisrel
