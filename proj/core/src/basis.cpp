#include "eisrel/basis.hpp"

#include <string>

namespace eisrel {

int dim_modular_forms(int k) {
    if (k < 4 || k % 2 != 0) {
        throw std::domain_error("dim_modular_forms: weight must be even and >= 4");
    }
    return k / 4 - (k - 2) / 6;
}

BasisDescriptor::BasisDescriptor(int k) : k_(k) {
    const int dim = dim_modular_forms(k);
    for (int i = (k - 2) / 6 + 2; i <= k / 4; ++i) {
        product_pairs_.emplace_back(2 * i, k - 2 * i);
    }
    if (static_cast<int>(size()) != dim) {
        throw std::logic_error("basis descriptor: element count disagrees with dimension");
    }
}

std::string BasisDescriptor::label(std::size_t m) const {
    if (m == 0) {
        return "E" + std::to_string(k_);
    }
    const auto& [a, b] = product_pairs_.at(m - 1);
    return "E" + std::to_string(a) + "*E" + std::to_string(b);
}

std::vector<std::string> BasisDescriptor::labels() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (std::size_t m = 0; m < size(); ++m) {
        out.push_back(label(m));
    }
    return out;
}

QSeries BasisDescriptor::element_series(std::size_t m, std::size_t precision) const {
    if (m == 0) {
        return eisenstein(k_, precision);
    }
    const auto& [a, b] = product_pairs_.at(m - 1);
    // Both factor weights are >= 4, where the plain product is already
    // the modular one; no derivative correction is involved.
    return (eisenstein(a, precision) * eisenstein(b, precision)).with_weight(k_);
}

BasisDescriptor basis_descriptor(int k) {
    return BasisDescriptor(k);
}

RationalMatrix basis_matrix(int k, std::size_t precision) {
    const BasisDescriptor basis(k);
    if (precision < basis.size()) {
        throw insufficient_precision_error(
            "basis_matrix: precision must be at least the basis size");
    }
    RationalMatrix m(basis.size(), precision);
    for (std::size_t row = 0; row < basis.size(); ++row) {
        const QSeries series = basis.element_series(row, precision);
        for (std::size_t n = 0; n < precision; ++n) {
            m.at(row, n) = series.coeff(n);
        }
    }
    return m;
}

QSeries Decomposition::reconstruct(std::size_t precision) const {
    QSeries acc = QSeries::zero(precision);
    for (std::size_t m = 0; m < coordinates.size(); ++m) {
        if (!coordinates[m].is_zero()) {
            acc = acc + basis.element_series(m, precision) * coordinates[m];
        }
    }
    return acc;
}

Decomposition decompose(const QSeries& target, int k) {
    const BasisDescriptor basis(k);
    const std::size_t dim = basis.size();
    if (target.precision() < dim + 1) {
        throw insufficient_precision_error(
            "decompose: target needs at least dim + 1 coefficients");
    }

    std::vector<QSeries> elements;
    elements.reserve(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        elements.push_back(basis.element_series(m, target.precision()));
    }

    // Square exact solve on the first dim coefficients.
    RationalMatrix aug(dim, dim + 1);
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = 0; m < dim; ++m) {
            aug.at(n, m) = elements[m].coeff(n);
        }
        aug.at(n, dim) = target.coeff(n);
    }
    RrefResult solved = rref(std::move(aug));

    std::vector<Rational> coords(dim);
    if (solved.rank == dim && solved.pivot_columns.back() != dim) {
        for (std::size_t m = 0; m < dim; ++m) {
            coords[m] = solved.reduced.at(m, dim);
        }
    } else if (!solved.pivot_columns.empty() && solved.pivot_columns.back() == dim) {
        throw not_in_span_error(
            "not in span: inconsistent system on the leading coefficients");
    } else {
        // Degenerate leading block; solve over every available coefficient
        // instead (free coordinates pinned to zero).
        RationalMatrix full(target.precision(), dim + 1);
        for (std::size_t n = 0; n < target.precision(); ++n) {
            for (std::size_t m = 0; m < dim; ++m) {
                full.at(n, m) = elements[m].coeff(n);
            }
            full.at(n, dim) = target.coeff(n);
        }
        RrefResult wide = rref(std::move(full));
        for (std::size_t p = 0; p < wide.pivot_columns.size(); ++p) {
            if (wide.pivot_columns[p] == dim) {
                throw not_in_span_error("not in span: inconsistent linear system");
            }
            coords[wide.pivot_columns[p]] = wide.reduced.at(p, dim);
        }
    }

    // Verify every available coefficient against the reconstruction; the
    // square solve only pinned the first dim of them.
    QSeries combo = QSeries::zero(target.precision());
    for (std::size_t m = 0; m < dim; ++m) {
        if (!coords[m].is_zero()) {
            combo = combo + elements[m] * coords[m];
        }
    }
    for (std::size_t n = 0; n < target.precision(); ++n) {
        if (!(combo.coeff(n) == target.coeff(n))) {
            throw not_in_span_error(
                "not in span: residual nonzero at coefficient of q^" + std::to_string(n),
                n);
        }
    }
    return Decomposition{basis, std::move(coords), target.precision()};
}

Decomposition reduce_product(int i, int k, std::size_t precision) {
    const int dim = dim_modular_forms(k);
    if (i < 2 || i > k / 4) {
        throw std::domain_error("reduce_product: index must satisfy 2 <= i <= k/4");
    }
    if (precision == 0) {
        precision = static_cast<std::size_t>(dim) + 10;
    }
    const QSeries product =
        (eisenstein(2 * i, precision) * eisenstein(k - 2 * i, precision)).with_weight(k);
    return decompose(product, k);
}

}  // namespace eisrel
