#include <doctest.h>

#include <complex>

#include "eisrel/lattice.hpp"
#include "eisrel/qseries.hpp"

using eisrel::eisenstein;
using eisrel::evaluate_qseries;
using eisrel::lattice_eisenstein;
using eisrel::LatticeParams;
using eisrel::QSeries;
using eisrel::Rational;

namespace {

const std::complex<double> kTauI(0.0, 1.0);

double disagreement(int k, std::complex<double> tau, int trunc) {
    const auto lattice = lattice_eisenstein(k, LatticeParams(trunc, trunc, tau));
    const auto series = evaluate_qseries(eisenstein(k, 60), tau);
    return std::abs(lattice - series);
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(LatticeParams(0, 10, kTauI), std::domain_error);
    CHECK_THROWS_AS(LatticeParams(10, 0, kTauI), std::domain_error);
    CHECK_THROWS_AS(LatticeParams(10, 10, std::complex<double>(0.0, -1.0)),
                    std::domain_error);
    CHECK_THROWS_AS(LatticeParams(10, 10, std::complex<double>(1.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("low weights are gated") {
    const LatticeParams p(50, 50, kTauI);
    CHECK_THROWS_AS(lattice_eisenstein(1, p), std::domain_error);
    CHECK_THROWS_AS(lattice_eisenstein(2, p), std::domain_error);
    // conditional convergence is an explicit opt-in
    const auto value = lattice_eisenstein(2, p, true);
    CHECK(std::isfinite(value.real()));
    CHECK(std::isfinite(value.imag()));
}

TEST_CASE("odd weights cancel pairwise") {
    for (const int k : {3, 5}) {
        const auto value = lattice_eisenstein(k, LatticeParams(50, 50, kTauI));
        CHECK(std::abs(value) < 1e-12);
    }
}

TEST_CASE("matches the q-expansion at tau = i") {
    CHECK(disagreement(4, kTauI, 400) < 1e-3);
    CHECK(disagreement(6, kTauI, 400) < 1e-6);
    CHECK(disagreement(8, kTauI, 400) < 1e-6);
}

TEST_CASE("truncation error shrinks as the window doubles") {
    for (const int k : {4, 6, 8}) {
        for (const auto tau : {kTauI, std::complex<double>(0.5, 1.0)}) {
            const double d100 = disagreement(k, tau, 100);
            const double d200 = disagreement(k, tau, 200);
            const double d400 = disagreement(k, tau, 400);
            // monotone trend, with an absolute floor for values that are
            // already at rounding noise
            CHECK(d200 <= d100 * 1.05 + 1e-14);
            CHECK(d400 <= d200 * 1.05 + 1e-14);
        }
    }
}

TEST_CASE("lattice sum is translation invariant up to truncation") {
    const std::complex<double> tau(0.3, 1.1);
    const auto at_tau = lattice_eisenstein(4, LatticeParams(200, 200, tau));
    const auto shifted = lattice_eisenstein(4, LatticeParams(200, 200, tau + 1.0));
    CHECK(std::abs(at_tau - shifted) < 1e-6);
}

TEST_CASE("series evaluation") {
    CHECK(std::abs(evaluate_qseries(QSeries::zero(10), kTauI)) == 0.0);
    CHECK(std::abs(evaluate_qseries(QSeries::constant(Rational(-7, 2), 10), kTauI) -
                   std::complex<double>(-3.5, 0.0)) == 0.0);

    // tail negligibility: two working precisions agree far beyond the target
    const std::complex<double> two_i(0.0, 2.0);
    const auto lo = evaluate_qseries(eisenstein(4, 60), two_i);
    const auto hi = evaluate_qseries(eisenstein(4, 80), two_i);
    CHECK(std::abs(lo - hi) < 1e-12);
}

}  // TEST_SUITE
