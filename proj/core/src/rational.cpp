#include "eisrel/rational.hpp"

#include <cctype>
#include <ostream>

namespace eisrel {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw zero_division_error();
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(std::string_view text) {
    for (const char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
            throw std::invalid_argument("malformed rational: whitespace in \"" +
                                        std::string(text) + "\"");
        }
    }
    try {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        const Integer num(std::string(text.substr(0, slash)));
        const Integer den(std::string(text.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
}

Rational Rational::abs() const {
    Rational out = *this;
    mpq_abs(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational Rational::operator-() const {
    Rational out = *this;
    mpq_neg(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw zero_division_error();
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace eisrel
