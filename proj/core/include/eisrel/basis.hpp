#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eisrel/matrix.hpp"
#include "eisrel/qseries.hpp"

namespace eisrel {

/// Thrown by decompose when the target series is not an exact rational
/// combination of the basis elements. Carries the index of the first
/// q-coefficient that cannot be matched when one is known.
class not_in_span_error : public std::runtime_error {
public:
    explicit not_in_span_error(const std::string& msg,
                               std::optional<std::size_t> coefficient_index = std::nullopt)
        : std::runtime_error(msg), index_(coefficient_index) {}
    std::optional<std::size_t> coefficient_index() const { return index_; }

private:
    std::optional<std::size_t> index_;
};

/// Thrown when a series is too short for the requested linear algebra.
class insufficient_precision_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// dim M_k = floor(k/4) - floor((k-2)/6) for even k >= 4. Smaller or odd
/// weights are rejected rather than special-cased.
int dim_modular_forms(int k);

/// Ordered basis of the weight-k modular forms: element 0 is the
/// Eisenstein series E_k, element m >= 1 is the plain product
/// E_{2i} E_{k-2i} with i = floor((k-2)/6) + 1 + m, up to i = floor(k/4).
/// The element count equals dim_modular_forms(k). Both factor weights are
/// >= 4, where the plain product already is the modular one.
class BasisDescriptor {
public:
    explicit BasisDescriptor(int k);

    int weight() const { return k_; }
    std::size_t size() const { return 1 + product_pairs_.size(); }
    const std::vector<std::pair<int, int>>& product_pairs() const { return product_pairs_; }

    /// "E<k>" for element 0, "E<a>*E<b>" for the products.
    std::string label(std::size_t m) const;
    std::vector<std::string> labels() const;

    /// q-expansion of element m to the given precision.
    QSeries element_series(std::size_t m, std::size_t precision) const;

private:
    int k_;
    std::vector<std::pair<int, int>> product_pairs_;
};

BasisDescriptor basis_descriptor(int k);

/// Row m holds the first `precision` q-coefficients of basis element m.
/// precision must be at least dim_modular_forms(k).
RationalMatrix basis_matrix(int k, std::size_t precision);

/// Exact coordinates of a weight-k series in the basis, together with the
/// precision on which agreement was verified.
struct Decomposition {
    BasisDescriptor basis;
    std::vector<Rational> coordinates;
    std::size_t verified_precision;

    /// Linear combination of the basis elements with these coordinates.
    QSeries reconstruct(std::size_t precision) const;
};

/// Solves the square linear system on the first dim_modular_forms(k)
/// coefficients of the target, then verifies the solution against every
/// remaining coefficient. Requires target precision >= dim + 1; throws
/// not_in_span_error (with the offending index) when any coefficient
/// deviates.
Decomposition decompose(const QSeries& target, int k);

/// Decomposition of the plain product E_{2i} E_{k-2i} in the weight-k
/// basis, computed at the given precision (default dim + 10). Valid for
/// 2 <= i <= floor(k/4); failure inside that range would contradict the
/// spanning property and is surfaced as not_in_span_error.
Decomposition reduce_product(int i, int k, std::size_t precision = 0);

}  // namespace eisrel
