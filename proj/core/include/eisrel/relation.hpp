#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisrel/matrix.hpp"
#include "eisrel/qseries.hpp"
#include "eisrel/rational.hpp"

namespace eisrel {

/// Index triple (r, s, t) of positive integers with combined weight
/// r + s + t - 1. The symbolic identities accept any such triple; the
/// series relations additionally require combined weight >= 3, which the
/// relation constructors enforce.
struct Triple {
    int r;
    int s;
    int t;

    Triple(int r_, int s_, int t_);
    int weight() const { return r + s + t - 1; }
};

/// Exact coefficient vector of one linear relation
///
///   c_E * E_k + sum over pairs  c_{i,j} * P_{i,j}  =  0
///
/// on the weight-k generators E_k and P_{i,j} (i <= j, i + j = k, both
/// even). Product keys are stored sparsely in canonical order and never
/// hold explicit zeros. Vectors are not normalized: the identities fix
/// them only up to scale.
class RelationVector {
public:
    explicit RelationVector(int k) : k_(k) {}

    int weight() const { return k_; }
    const Rational& eisenstein_coefficient() const { return coeff_e_; }
    const std::map<std::pair<int, int>, Rational>& product_coefficients() const {
        return coeff_p_;
    }
    /// Coefficient of P_{i,j}; the key order is canonicalized, missing
    /// keys read as zero.
    Rational product_coefficient(int i, int j) const;
    bool is_zero() const;

    /// Accumulators used by the relation builders. Product keys must have
    /// both members even (P with an odd index vanishes identically and is
    /// never stored); entries that cancel to zero are removed.
    void add_eisenstein(const Rational& c) { coeff_e_ += c; }
    void add_product(int i, int j, const Rational& c);

    /// Divides by the first nonzero coefficient in generator order (E_k
    /// first, then product pairs by increasing first index). The zero
    /// vector is returned unchanged.
    RelationVector normalized() const;

    friend bool operator==(const RelationVector& a, const RelationVector& b) = default;

private:
    int k_;
    Rational coeff_e_;
    std::map<std::pair<int, int>, Rational> coeff_p_;
};

/// The scalar c with a = c * b when one exists (c = 1 when both vectors are
/// zero, c = 0 when only a is). std::nullopt when the vectors are not
/// proportional or the weights differ.
std::optional<Rational> proportionality_ratio(const RelationVector& a,
                                              const RelationVector& b);

/// The three-sum binomial relation attached to (r, s, t): each of the three
/// cyclic sums runs over ordered splittings (a, b) of k = r+s+t-1 and
/// contributes +-C(a-1, .) C(b-1, .) to P_{a,b} (kept only when both
/// indices are even) and -(-1)^b times that to E_k (kept for every
/// splitting, odd ones included). For odd k every generator vanishes
/// identically and the zero vector is returned. Requires k >= 3.
RelationVector relation_vector(const Triple& t);

/// c_E * eisenstein(k) + sum c_{i,j} * eisenstein_product(i, j), truncated
/// to the given precision. Zero for every vector built by the constructors
/// above -- that is the identity the library materializes.
QSeries evaluate_relation(const RelationVector& v, std::size_t precision);

/// The pair relation obtained by specializing the third index to 1,
/// built from its own coefficient formula
///
///   0 = sum_{i+j=r+s} (C(i-1,r-1) + C(i-1,s-1)) (P_{i,j} - E_{r+s})
///       - P_{r,s} + (-1)^s E_{r+s}
///
/// so it can serve as an independent cross-check of relation_vector(r,s,1).
/// Requires r + s even and >= 4.
RelationVector popa_relation(int r, int s);

/// C(r+s, r) - (-1)^s: the E_{r+s} coefficient of the pair relation above,
/// negated. Requires r + s even and >= 4.
Rational popa_constant(int r, int s);

/// The triple (2i-1, 2i-1, k-4i+3) whose relation eliminates the product
/// E_{2i} E_{k-2i} from the generating set: its vector has zero coefficient
/// on every P_{2p,k-2p} with p < i and a negative integer coefficient on
/// P_{2i,k-2i}. Valid for 2 <= i <= floor((k-2)/6) + 1, k even.
Triple elimination_triple(int i, int k);

/// All relations of weight k: one row per triple (r, s, t) with
/// r + s + t = k + 1 (r outermost, then s, ascending), columns in generator
/// order E_k, P_{2,k-2}, P_{4,k-4}, ..., P_{2*floor(k/4), ...}.
/// Requires k >= 4 even.
RationalMatrix relation_matrix(int k);

/// Column labels for relation_matrix: "E<k>" then "P<i>,<j>".
std::vector<std::string> relation_matrix_labels(int k);

/// Text form: line "k=<K>", then "E: p/q" if nonzero, then one
/// "P i j: p/q" line per stored product key in generator order.
std::string to_text(const RelationVector& v);

}  // namespace eisrel
