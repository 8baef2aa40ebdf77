#include "eisrel/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace eisrel {

namespace {

template <typename Map, typename Key>
void accumulate_term(Map& terms, const Key& key, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

template <typename Map>
void merge_terms(Map& into, const Map& from) {
    for (const auto& [key, c] : from) {
        accumulate_term(into, key, c);
    }
}

}  // namespace

void BivarPolynomial::add_term(int a, int b, const Rational& c) {
    if (a < 0 || b < 0) {
        throw std::domain_error("bivar polynomial: negative exponent");
    }
    accumulate_term(terms_, Exponents{a, b}, c);
}

Rational BivarPolynomial::coefficient(int a, int b) const {
    const auto it = terms_.find(Exponents{a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPolynomial::max_exponent() const {
    int m = 0;
    for (const auto& [exps, c] : terms_) {
        m = std::max({m, exps[0], exps[1]});
    }
    return m;
}

BivarPolynomial& BivarPolynomial::operator+=(const BivarPolynomial& o) {
    merge_terms(terms_, o.terms_);
    return *this;
}

void LaurentPoly3::add_term(int a, int b, int c, const Rational& coeff) {
    accumulate_term(terms_, Exponents{a, b, c}, coeff);
}

Rational LaurentPoly3::coefficient(int a, int b, int c) const {
    const auto it = terms_.find(Exponents{a, b, c});
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
    merge_terms(terms_, o.terms_);
    return *this;
}

LaurentPoly3& LaurentPoly3::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

std::string to_text(const BivarPolynomial& p) {
    std::ostringstream os;
    for (const auto& [exps, c] : p.terms()) {
        os << exps[0] << ' ' << exps[1] << ": " << c.str() << '\n';
    }
    return os.str();
}

std::string to_text(const LaurentPoly3& p) {
    std::ostringstream os;
    for (const auto& [exps, c] : p.terms()) {
        os << exps[0] << ' ' << exps[1] << ' ' << exps[2] << ": " << c.str() << '\n';
    }
    return os.str();
}

}  // namespace eisrel
