#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eisrel {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Thrown on rational division by zero (a distinct error type so callers
/// can tell a forbidden division from an ordinary domain violation).
class zero_division_error : public std::domain_error {
public:
    zero_division_error() : std::domain_error("rational division by zero") {}
};

/// Exact rational number over arbitrary-precision integers.
///
/// Values are kept in canonical form at all times: the denominator is
/// positive, numerator and denominator are coprime, and zero is stored as
/// 0/1. The textual form is "p/q"; plain integers render without the "/1"
/// suffix and both spellings parse.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p" or "p/q" (decimal). Throws std::invalid_argument on
    /// malformed text and zero_division_error on a zero denominator.
    static Rational from_string(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    Rational abs() const;

    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace eisrel
