#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "eisrel/rational.hpp"

namespace eisrel {

/// Sparse polynomial in x and z with exact rational coefficients and
/// non-negative exponents. Used for cleared-denominator residues of the
/// pole identities; a correct identity leaves the zero polynomial.
class BivarPolynomial {
public:
    using Exponents = std::array<int, 2>;  // powers of x, z

    /// Accumulates c * x^a z^b; entries that cancel are removed.
    /// Negative exponents are a domain error.
    void add_term(int a, int b, const Rational& c);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(int a, int b) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Largest exponent appearing in any term (0 for the zero polynomial).
    int max_exponent() const;

    BivarPolynomial& operator+=(const BivarPolynomial& o);
    friend bool operator==(const BivarPolynomial& a, const BivarPolynomial& b) = default;

private:
    std::map<Exponents, Rational> terms_;
};

/// Sparse Laurent polynomial in three independent variables x, y, z;
/// exponents may be negative.
class LaurentPoly3 {
public:
    using Exponents = std::array<int, 3>;  // powers of x, y, z

    void add_term(int a, int b, int c, const Rational& coeff);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(int a, int b, int c) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly3& operator+=(const LaurentPoly3& o);
    LaurentPoly3& operator*=(const Rational& c);
    friend bool operator==(const LaurentPoly3& a, const LaurentPoly3& b) = default;

private:
    std::map<Exponents, Rational> terms_;
};

/// Text forms: one line per term, "a b: p/q" / "a b c: p/q", sorted
/// lexicographically by exponents. The zero polynomial prints nothing.
std::string to_text(const BivarPolynomial& p);
std::string to_text(const LaurentPoly3& p);

}  // namespace eisrel
