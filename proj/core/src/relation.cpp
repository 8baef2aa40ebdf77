#include "eisrel/relation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eisrel/number_theory.hpp"

namespace eisrel {

Triple::Triple(int r_, int s_, int t_) : r(r_), s(s_), t(t_) {
    if (r < 1 || s < 1 || t < 1) {
        throw std::domain_error("triple: indices must be positive integers");
    }
}

Rational RelationVector::product_coefficient(int i, int j) const {
    const auto key = std::make_pair(std::min(i, j), std::max(i, j));
    const auto it = coeff_p_.find(key);
    return it == coeff_p_.end() ? Rational(0) : it->second;
}

bool RelationVector::is_zero() const {
    return coeff_e_.is_zero() && coeff_p_.empty();
}

void RelationVector::add_product(int i, int j, const Rational& c) {
    if (i % 2 != 0 || j % 2 != 0) {
        throw std::domain_error("relation vector: product keys must be even pairs");
    }
    if (i + j != k_) {
        throw std::domain_error("relation vector: product key weight mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    const auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto [it, inserted] = coeff_p_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeff_p_.erase(it);
        }
    }
}

RelationVector RelationVector::normalized() const {
    Rational lead = coeff_e_;
    if (lead.is_zero()) {
        for (const auto& [key, c] : coeff_p_) {
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        }
    }
    if (lead.is_zero()) {
        return *this;
    }
    RelationVector out(k_);
    out.coeff_e_ = coeff_e_ / lead;
    for (const auto& [key, c] : coeff_p_) {
        out.coeff_p_.emplace(key, c / lead);
    }
    return out;
}

std::optional<Rational> proportionality_ratio(const RelationVector& a,
                                              const RelationVector& b) {
    if (a.weight() != b.weight()) {
        return std::nullopt;
    }
    if (b.is_zero()) {
        return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
    }
    Rational ratio;
    if (!b.eisenstein_coefficient().is_zero()) {
        ratio = a.eisenstein_coefficient() / b.eisenstein_coefficient();
    } else {
        const auto& [key, c] = *b.product_coefficients().begin();
        ratio = a.product_coefficient(key.first, key.second) / c;
    }
    if (!(a.eisenstein_coefficient() == ratio * b.eisenstein_coefficient())) {
        return std::nullopt;
    }
    for (const auto& [key, c] : a.product_coefficients()) {
        if (!(c == ratio * b.product_coefficient(key.first, key.second))) {
            return std::nullopt;
        }
    }
    for (const auto& [key, c] : b.product_coefficients()) {
        if (!(a.product_coefficient(key.first, key.second) == ratio * c)) {
            return std::nullopt;
        }
    }
    return ratio;
}

namespace {

int parity_sign(int e) {
    return e % 2 == 0 ? 1 : -1;
}

void require_even_pair_weight(int k, const char* who) {
    if (k % 2 != 0 || k < 4) {
        throw std::domain_error(std::string(who) + ": requires r + s even and >= 4");
    }
}

}  // namespace

RelationVector relation_vector(const Triple& t) {
    const int k = t.weight();
    if (k < 3) {
        throw std::domain_error("relation_vector: combined weight must be >= 3");
    }
    RelationVector v(k);
    if (k % 2 != 0) {
        // Every generator of odd weight vanishes identically, so the
        // relation is the zero vector by convention. (The raw binomial
        // sums do not cancel formally; they multiply functions that are
        // all zero.)
        return v;
    }
    // One pass per cyclic sum. `first_choose`/`second_choose` select the
    // binomial rows C(first-1, .) C(second-1, .) and `sign_base` the
    // (-1)^{first + base} sign. The product coefficient survives only for
    // even splittings; the Eisenstein contribution -(-1)^{second} c is
    // accumulated for every splitting, odd ones included.
    const auto accumulate = [&](int first_choose, int second_choose, int sign_base) {
        for (int first = 1; first < k; ++first) {
            const int second = k - first;
            Rational c(binomial(first - 1, first_choose) *
                       binomial(second - 1, second_choose));
            if (c.is_zero()) {
                continue;
            }
            c *= parity_sign(first + sign_base);
            if (first % 2 == 0 && second % 2 == 0) {
                v.add_product(first, second, c);
            }
            v.add_eisenstein(Rational(-parity_sign(second)) * c);
        }
    };
    accumulate(t.t - 1, t.s - 1, t.r);
    accumulate(t.r - 1, t.t - 1, t.s);
    accumulate(t.s - 1, t.r - 1, t.t);
    return v;
}

QSeries evaluate_relation(const RelationVector& v, std::size_t precision) {
    if (precision == 0) {
        throw std::domain_error("evaluate_relation: precision must be positive");
    }
    QSeries acc = QSeries::zero(precision);
    if (!v.eisenstein_coefficient().is_zero()) {
        acc = acc + eisenstein(v.weight(), precision) * v.eisenstein_coefficient();
    }
    for (const auto& [key, c] : v.product_coefficients()) {
        acc = acc + eisenstein_product(key.first, key.second, precision) * c;
    }
    return acc;
}

RelationVector popa_relation(int r, int s) {
    if (r < 1 || s < 1) {
        throw std::domain_error("popa_relation: indices must be positive");
    }
    const int k = r + s;
    require_even_pair_weight(k, "popa_relation");
    RelationVector v(k);
    for (int i = 1; i < k; ++i) {
        const int j = k - i;
        const Rational c(binomial(i - 1, r - 1) + binomial(i - 1, s - 1));
        if (c.is_zero()) {
            continue;
        }
        if (i % 2 == 0 && j % 2 == 0) {
            v.add_product(i, j, c);
        }
        v.add_eisenstein(-c);
    }
    if (r % 2 == 0 && s % 2 == 0) {
        v.add_product(std::min(r, s), std::max(r, s), Rational(-1));
    }
    v.add_eisenstein(Rational(parity_sign(s)));
    return v;
}

Rational popa_constant(int r, int s) {
    if (r < 1 || s < 1) {
        throw std::domain_error("popa_constant: indices must be positive");
    }
    require_even_pair_weight(r + s, "popa_constant");
    return Rational(binomial(r + s, r)) - Rational(parity_sign(s));
}

Triple elimination_triple(int i, int k) {
    if (k < 4 || k % 2 != 0) {
        throw std::domain_error("elimination_triple: weight must be even and >= 4");
    }
    if (i < 2 || i > (k - 2) / 6 + 1) {
        throw std::domain_error("elimination_triple: index out of range");
    }
    return Triple(2 * i - 1, 2 * i - 1, k - 4 * i + 3);
}

RationalMatrix relation_matrix(int k) {
    if (k < 4 || k % 2 != 0) {
        throw std::domain_error("relation_matrix: weight must be even and >= 4");
    }
    const std::size_t cols = 1 + static_cast<std::size_t>(k / 4);
    const std::size_t rows = static_cast<std::size_t>(k) * (k - 1) / 2;
    RationalMatrix m(rows, cols);
    std::size_t row = 0;
    for (int r = 1; r < k; ++r) {
        for (int s = 1; s <= k - r; ++s) {
            const int t = k + 1 - r - s;
            const RelationVector v = relation_vector(Triple(r, s, t));
            m.at(row, 0) = v.eisenstein_coefficient();
            for (int i = 1; i <= k / 4; ++i) {
                m.at(row, static_cast<std::size_t>(i)) =
                    v.product_coefficient(2 * i, k - 2 * i);
            }
            ++row;
        }
    }
    return m;
}

std::vector<std::string> relation_matrix_labels(int k) {
    if (k < 4 || k % 2 != 0) {
        throw std::domain_error("relation_matrix_labels: weight must be even and >= 4");
    }
    std::vector<std::string> labels;
    labels.push_back("E" + std::to_string(k));
    for (int i = 1; i <= k / 4; ++i) {
        labels.push_back("P" + std::to_string(2 * i) + "," + std::to_string(k - 2 * i));
    }
    return labels;
}

std::string to_text(const RelationVector& v) {
    std::ostringstream os;
    os << "k=" << v.weight() << '\n';
    if (!v.eisenstein_coefficient().is_zero()) {
        os << "E: " << v.eisenstein_coefficient().str() << '\n';
    }
    for (const auto& [key, c] : v.product_coefficients()) {
        os << "P " << key.first << ' ' << key.second << ": " << c.str() << '\n';
    }
    return os.str();
}

}  // namespace eisrel
