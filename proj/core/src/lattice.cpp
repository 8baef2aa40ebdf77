#include "eisrel/lattice.hpp"

#include <numbers>
#include <stdexcept>

namespace eisrel {

namespace {

std::complex<double> int_power(std::complex<double> z, int e) {
    std::complex<double> out(1.0, 0.0);
    for (int i = 0; i < e; ++i) {
        out *= z;
    }
    return out;
}

}  // namespace

LatticeParams::LatticeParams(int outer, int inner, std::complex<double> tau_point)
    : outer_limit(outer), inner_limit(inner), tau(tau_point) {
    if (outer < 1 || inner < 1) {
        throw std::domain_error("lattice: truncation limits must be positive");
    }
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("lattice: tau must lie in the upper half-plane");
    }
}

std::complex<double> lattice_eisenstein(int k, const LatticeParams& params,
                                        bool allow_conditional) {
    if (k < 2 || (k == 2 && !allow_conditional)) {
        throw std::domain_error(
            "lattice_eisenstein: weight must be >= 3 (k = 2 is conditionally "
            "convergent and needs the explicit opt-in)");
    }
    // Inner sum over n first for each m, outer sum in ascending m; this is
    // the iterated order under which the conditionally convergent cases
    // make sense, and it keeps the result deterministic.
    std::complex<double> total(0.0, 0.0);
    for (int m = -params.outer_limit; m <= params.outer_limit; ++m) {
        std::complex<double> inner(0.0, 0.0);
        for (int n = -params.inner_limit; n <= params.inner_limit; ++n) {
            if (m == 0 && n == 0) {
                continue;
            }
            const std::complex<double> base =
                static_cast<double>(m) * params.tau + static_cast<double>(n);
            inner += 1.0 / int_power(base, k);
        }
        total += inner;
    }
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    return total / int_power(two_pi_i, k);
}

std::complex<double> evaluate_qseries(const QSeries& f, std::complex<double> tau) {
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    const std::complex<double> q = std::exp(two_pi_i * tau);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t n = f.precision(); n-- > 0;) {
        acc = acc * q + f.coeff(n).to_double();
    }
    return acc;
}

}  // namespace eisrel
