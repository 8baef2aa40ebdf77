#include "eisrel/qseries.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "eisrel/number_theory.hpp"

namespace eisrel {

namespace {

std::optional<int> combined_weight_for_sum(const QSeries& f, const QSeries& g) {
    if (f.weight() && g.weight() && *f.weight() == *g.weight()) {
        return f.weight();
    }
    return std::nullopt;  // mixed-weight sums are allowed but untagged
}

void check_weight_tag(int k) {
    if (k < 0) {
        throw std::domain_error("qseries: weight tag must be non-negative");
    }
}

}  // namespace

QSeries::QSeries(std::size_t precision) : coeffs_(precision) {
    if (precision == 0) {
        throw std::domain_error("qseries: precision must be positive");
    }
}

QSeries::QSeries(std::vector<Rational> coeffs, std::optional<int> weight)
    : coeffs_(std::move(coeffs)), weight_(weight) {
    if (coeffs_.empty()) {
        throw std::domain_error("qseries: precision must be positive");
    }
    if (weight_) {
        check_weight_tag(*weight_);
    }
}

QSeries QSeries::constant(const Rational& c, std::size_t precision) {
    QSeries out(precision);
    out.coeffs_[0] = c;
    return out;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::with_weight(int k) const {
    check_weight_tag(k);
    QSeries out = *this;
    out.weight_ = k;
    return out;
}

QSeries QSeries::without_weight() const {
    QSeries out = *this;
    out.weight_ = std::nullopt;
    return out;
}

QSeries QSeries::truncated(std::size_t n) const {
    if (n == 0 || n > precision()) {
        throw std::domain_error("qseries: truncation length out of range");
    }
    QSeries out(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n));
    out.weight_ = weight_;
    return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f.coeffs_[i] + g.coeffs_[i];
    }
    return QSeries(std::move(out), combined_weight_for_sum(f, g));
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f.coeffs_[i] - g.coeffs_[i];
    }
    return QSeries(std::move(out), combined_weight_for_sum(f, g));
}

QSeries operator*(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Rational> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (f.coeffs_[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; a + b < n; ++b) {
            if (!g.coeffs_[b].is_zero()) {
                out[a + b] += f.coeffs_[a] * g.coeffs_[b];
            }
        }
    }
    std::optional<int> weight;
    if (f.weight_ && g.weight_) {
        weight = *f.weight_ + *g.weight_;
    }
    return QSeries(std::move(out), weight);
}

QSeries operator*(const QSeries& f, const Rational& c) {
    std::vector<Rational> out(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i) {
        out[i] = f.coeffs_[i] * c;
    }
    return QSeries(std::move(out), f.weight_);
}

QSeries operator/(const QSeries& f, const Rational& c) {
    if (c.is_zero()) {
        throw zero_division_error();
    }
    return f * (Rational(1) / c);
}

QSeries QSeries::operator-() const {
    return *this * Rational(-1);
}

QSeries theta_derivative(const QSeries& f) {
    std::vector<Rational> out(f.precision());
    for (std::size_t n = 1; n < f.precision(); ++n) {
        out[n] = f.coeff(n) * Rational(Integer(n));
    }
    return QSeries(std::move(out));
}

QSeries eisenstein(int k, std::size_t precision) {
    if (k < 1) {
        throw std::domain_error("eisenstein: weight must be a positive integer");
    }
    if (precision == 0) {
        throw std::domain_error("eisenstein: precision must be positive");
    }
    std::vector<Rational> coeffs(precision);
    if (k % 2 == 0) {
        // constant term -B_k / k!, then 2 sigma_{k-1}(n) / (k-1)!
        coeffs[0] = -bernoulli(static_cast<unsigned>(k)) / Rational(factorial(k));
        const Rational lead = Rational(2) / Rational(factorial(k - 1));
        for (std::size_t n = 1; n < precision; ++n) {
            coeffs[n] = lead * Rational(sigma(static_cast<unsigned>(k - 1), n));
        }
    }
    return QSeries(std::move(coeffs), k);
}

QSeries eisenstein_product(int r, int s, std::size_t precision) {
    if (r < 1 || s < 1) {
        throw std::domain_error("eisenstein_product: indices must be positive");
    }
    const QSeries er = eisenstein(r, precision);
    const QSeries es = eisenstein(s, precision);
    QSeries out = er * es;
    if (r == 2) {
        out = out + theta_derivative(es) / Rational(s);
    }
    if (s == 2) {
        out = out + theta_derivative(er) / Rational(r);
    }
    return out.with_weight(r + s);
}

std::string to_text(const QSeries& f) {
    std::ostringstream os;
    os << "prec=" << f.precision() << " weight=";
    if (f.weight()) {
        os << *f.weight();
    } else {
        os << "none";
    }
    os << '\n';
    for (std::size_t n = 0; n < f.precision(); ++n) {
        os << n << ": " << f.coeff(n).str() << '\n';
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("qseries parse: " + what);
}

std::size_t parse_size(const std::string& token, const std::string& what) {
    // stoul accepts (and wraps) a leading minus sign, so require digits only
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail("bad " + what + " \"" + token + "\"");
    }
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(token, &pos);
    } catch (const std::exception&) {
        parse_fail("bad " + what + " \"" + token + "\"");
    }
    if (pos != token.size()) {
        parse_fail("bad " + what + " \"" + token + "\"");
    }
    return value;
}

}  // namespace

QSeries qseries_from_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        parse_fail("missing header line");
    }
    std::istringstream hs(header);
    std::string prec_field;
    std::string weight_field;
    std::string extra;
    hs >> prec_field >> weight_field;
    if (hs >> extra) {
        parse_fail("trailing tokens in header");
    }
    if (prec_field.rfind("prec=", 0) != 0 || weight_field.rfind("weight=", 0) != 0) {
        parse_fail("header must be \"prec=N weight=K|none\"");
    }
    const std::size_t precision = parse_size(prec_field.substr(5), "precision");
    if (precision == 0) {
        parse_fail("precision must be positive");
    }
    std::optional<int> weight;
    const std::string weight_token = weight_field.substr(7);
    if (weight_token != "none") {
        weight = static_cast<int>(parse_size(weight_token, "weight"));
    }

    std::vector<Rational> coeffs(precision);
    for (std::size_t n = 0; n < precision; ++n) {
        std::string line;
        if (!std::getline(in, line)) {
            parse_fail("expected " + std::to_string(precision) + " coefficient lines");
        }
        const auto colon = line.find(": ");
        if (colon == std::string::npos) {
            parse_fail("bad coefficient line \"" + line + "\"");
        }
        if (parse_size(line.substr(0, colon), "coefficient index") != n) {
            parse_fail("coefficient lines must be numbered 0..N-1 in order");
        }
        coeffs[n] = Rational::from_string(line.substr(colon + 2));
    }
    std::string rest;
    while (std::getline(in, rest)) {
        if (!rest.empty()) {
            parse_fail("trailing content after coefficient lines");
        }
    }
    return QSeries(std::move(coeffs), weight);
}

QSeries qseries_from_text(const std::string& text) {
    std::istringstream in(text);
    return qseries_from_text(in);
}

}  // namespace eisrel
