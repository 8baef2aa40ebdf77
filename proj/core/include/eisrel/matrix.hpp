#pragma once

#include <cstddef>
#include <vector>

#include "eisrel/rational.hpp"

namespace eisrel {

/// Dense matrix over the rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t i, const Rational& c);
    /// row[dst] += c * row[src]
    void add_scaled_row(std::size_t dst, std::size_t src, const Rational& c);

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Exact reduced row echelon form. Pivot rule: scan columns left to right,
/// take the first nonzero entry at or below the current row (no magnitude
/// pivoting is needed in exact arithmetic), so the result is deterministic.
RrefResult rref(RationalMatrix m);

}  // namespace eisrel
