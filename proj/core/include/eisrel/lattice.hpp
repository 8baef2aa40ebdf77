#pragma once

#include <complex>

#include "eisrel/qseries.hpp"

namespace eisrel {

/// Truncation bounds and evaluation point for the double lattice sum.
/// tau lives in the upper half-plane; outer_limit bounds the m range and
/// inner_limit the n range.
struct LatticeParams {
    int outer_limit;
    int inner_limit;
    std::complex<double> tau;

    LatticeParams(int outer, int inner, std::complex<double> tau_point);
};

/// Truncated double lattice sum
///
///   (2 pi i)^{-k} sum_{m=-M}^{M} sum_{n=-N}^{N, (m,n) != (0,0)} (m tau + n)^{-k}
///
/// summed inner-n-first, then outer-m in ascending order, matching the
/// iterated limit that recovers the Eisenstein q-expansion. Absolutely
/// convergent only for k >= 3; the conditionally convergent k = 2 case
/// (where this summation order is the definition) must be opted into via
/// allow_conditional, and k <= 1 is always rejected.
std::complex<double> lattice_eisenstein(int k, const LatticeParams& params,
                                        bool allow_conditional = false);

/// Floating-point value of a truncated q-expansion at tau via
/// q = exp(2 pi i tau). Meaningful when Im(tau) > 0 so that |q| < 1 and
/// the discarded tail is controlled.
std::complex<double> evaluate_qseries(const QSeries& f, std::complex<double> tau);

}  // namespace eisrel
