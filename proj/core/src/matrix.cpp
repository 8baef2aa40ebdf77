#include "eisrel/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace eisrel {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::domain_error("matrix: dimensions must be positive");
    }
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(at(a, j), at(b, j));
    }
}

void RationalMatrix::scale_row(std::size_t i, const Rational& c) {
    for (std::size_t j = 0; j < cols_; ++j) {
        at(i, j) *= c;
    }
}

void RationalMatrix::add_scaled_row(std::size_t dst, std::size_t src, const Rational& c) {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!at(src, j).is_zero()) {
            at(dst, j) += c * at(src, j);
        }
    }
}

RrefResult rref(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        m.swap_rows(pivot_row, sel);
        m.scale_row(pivot_row, Rational(1) / m.at(pivot_row, col));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && !m.at(r, col).is_zero()) {
                m.add_scaled_row(r, pivot_row, -m.at(r, col));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    const std::size_t rank = pivots.size();
    return RrefResult{std::move(m), rank, std::move(pivots)};
}

}  // namespace eisrel
