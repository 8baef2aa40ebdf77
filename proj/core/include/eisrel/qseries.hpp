#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eisrel/rational.hpp"

namespace eisrel {

/// Truncated formal power series in q with exact rational coefficients.
///
/// A series of precision N stores the coefficients of q^0 .. q^{N-1}; all
/// stored coefficients are trusted exactly. Arithmetic between series of
/// different precision truncates to the smaller one, so a result never
/// claims coefficients it does not know.
///
/// The optional weight tag is advisory metadata for display; it never
/// influences arithmetic. Adding series with different (or missing) tags
/// clears the tag, multiplication adds tags, scaling keeps them.
class QSeries {
public:
    /// Zero series of the given precision (must be >= 1).
    explicit QSeries(std::size_t precision);
    explicit QSeries(std::vector<Rational> coeffs,
                     std::optional<int> weight = std::nullopt);

    static QSeries zero(std::size_t precision) { return QSeries(precision); }
    static QSeries constant(const Rational& c, std::size_t precision);

    std::size_t precision() const { return coeffs_.size(); }
    const Rational& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    std::optional<int> weight() const { return weight_; }
    QSeries with_weight(int k) const;
    QSeries without_weight() const;

    /// First n coefficients as a series of precision n (n <= precision).
    QSeries truncated(std::size_t n) const;

    /// Equality of precision and coefficients; the weight tag is metadata
    /// and does not participate.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const Rational& c);
    friend QSeries operator*(const Rational& c, const QSeries& f) { return f * c; }
    friend QSeries operator/(const QSeries& f, const Rational& c);
    QSeries operator-() const;

private:
    std::vector<Rational> coeffs_;
    std::optional<int> weight_;
};

/// q d/dq: the coefficient of q^n becomes n times the input coefficient.
/// Same precision; the weight tag is cleared.
QSeries theta_derivative(const QSeries& f);

/// q-expansion of the weight-k Eisenstein series in the normalization with
/// constant term -B_k/k! and higher coefficients 2 sigma_{k-1}(n)/(k-1)!.
/// Odd k >= 1 gives the zero series. k <= 0 is a domain error.
QSeries eisenstein(int k, std::size_t precision);

/// E_r E_s plus the derivative corrections theta(E_s)/s when r = 2 and
/// theta(E_r)/r when s = 2; for even r, s this is a genuine modular form
/// of weight r+s although the factors individually need not be. Symmetric
/// in (r, s); tagged with weight r+s.
QSeries eisenstein_product(int r, int s, std::size_t precision);

/// Text form: one line "prec=N weight=K|none", then N lines "n: p/q".
/// Emitted and parsed bit-exactly.
std::string to_text(const QSeries& f);
QSeries qseries_from_text(std::istream& in);
QSeries qseries_from_text(const std::string& text);

}  // namespace eisrel
