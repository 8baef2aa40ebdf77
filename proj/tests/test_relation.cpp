#include <doctest.h>

#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "eisrel/relation.hpp"

using eisrel::elimination_triple;
using eisrel::evaluate_relation;
using eisrel::popa_constant;
using eisrel::popa_relation;
using eisrel::proportionality_ratio;
using eisrel::Rational;
using eisrel::relation_matrix;
using eisrel::relation_vector;
using eisrel::RelationVector;
using eisrel::Triple;

namespace {

// Independent oracle: walks the three binomial sums literally, with its own
// Pascal-triangle binomials and its own accumulation, sharing nothing with
// the library construction beyond the statement itself.
struct OracleVector {
    long coeff_e = 0;
    std::map<std::pair<int, int>, long> coeff_p;
};

long pascal(int n, int k) {
    if (k < 0 || k > n || n < 0) {
        return 0;
    }
    std::vector<long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> next(i + 1, 1);
        for (int j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

OracleVector oracle_relation(int r, int s, int t) {
    const int k = r + s + t - 1;
    OracleVector v;
    if (k % 2 != 0) {
        return v;
    }
    const auto add = [&](int a, int b, long c) {
        if (c == 0) {
            return;
        }
        if (a % 2 == 0 && b % 2 == 0) {
            const auto key = std::make_pair(a < b ? a : b, a < b ? b : a);
            v.coeff_p[key] += c;
            if (v.coeff_p[key] == 0) {
                v.coeff_p.erase(key);
            }
        }
        v.coeff_e += (b % 2 == 0 ? -1 : 1) * c;  // -(-1)^b c
    };
    for (int i = 1; i < k; ++i) {
        const int j = k - i;
        add(i, j, pascal(i - 1, t - 1) * pascal(j - 1, s - 1) * ((i + r) % 2 == 0 ? 1 : -1));
    }
    for (int j = 1; j < k; ++j) {
        const int h = k - j;
        add(j, h, pascal(j - 1, r - 1) * pascal(h - 1, t - 1) * ((j + s) % 2 == 0 ? 1 : -1));
    }
    for (int h = 1; h < k; ++h) {
        const int i = k - h;
        add(h, i, pascal(h - 1, s - 1) * pascal(i - 1, r - 1) * ((h + t) % 2 == 0 ? 1 : -1));
    }
    return v;
}

bool matches_oracle(const RelationVector& v, const OracleVector& o) {
    if (!(v.eisenstein_coefficient() == Rational(o.coeff_e))) {
        return false;
    }
    if (v.product_coefficients().size() != o.coeff_p.size()) {
        return false;
    }
    for (const auto& [key, c] : o.coeff_p) {
        if (!(v.product_coefficient(key.first, key.second) == Rational(c))) {
            return false;
        }
    }
    return true;
}

RelationVector make_vector(int k, long e,
                           std::initializer_list<std::tuple<int, int, long>> products) {
    RelationVector v(k);
    v.add_eisenstein(Rational(e));
    for (const auto& [i, j, c] : products) {
        v.add_product(i, j, Rational(c));
    }
    return v;
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("triple validation") {
    CHECK_THROWS_AS(Triple(0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(Triple(1, -2, 1), std::domain_error);
    CHECK(Triple(2, 3, 4).weight() == 8);
    // combined weight 2 is fine for the symbolic identities but not here
    CHECK_THROWS_AS(relation_vector(Triple(1, 1, 1)), std::domain_error);
}

TEST_CASE("worked example weight 4") {
    const RelationVector expected = make_vector(4, -5, {{2, 2, 1}});
    CHECK(relation_vector(Triple(1, 2, 2)) == expected);
    CHECK(relation_vector(Triple(2, 1, 2)) == expected);
    CHECK(relation_vector(Triple(2, 2, 1)) == expected);

    // proportional to 5 E_4 - P_{2,2}
    const RelationVector target = make_vector(4, 5, {{2, 2, -1}});
    const auto ratio = proportionality_ratio(relation_vector(Triple(1, 2, 2)), target);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == Rational(-1));
}

TEST_CASE("frozen golden vectors") {
    CHECK(relation_vector(Triple(3, 3, 3)) == make_vector(8, 63, {{4, 4, -27}}));
    CHECK(relation_vector(Triple(3, 3, 7)) ==
          make_vector(12, 572, {{4, 8, -168}, {6, 6, -100}}));
    CHECK(relation_vector(Triple(1, 1, 3)) == make_vector(4, 5, {{2, 2, -1}}));
}

TEST_CASE("odd splittings feed the Eisenstein coefficient") {
    // For (1,2,2) the even splitting alone contributes -1 to E_4; the
    // final -5 only appears because the odd splittings (1,3) and (3,1)
    // keep their E contributions after their products are dropped.
    const RelationVector v = relation_vector(Triple(1, 2, 2));
    CHECK(v.eisenstein_coefficient() == Rational(-5));
    CHECK(v.product_coefficient(2, 2) == Rational(1));
}

TEST_CASE("agrees with the brute-force oracle") {
    for (int k = 4; k <= 14; k += 2) {
        for (int r = 1; r < k; ++r) {
            for (int s = 1; s <= k - r; ++s) {
                const int t = k + 1 - r - s;
                CHECK_MESSAGE(
                    matches_oracle(relation_vector(Triple(r, s, t)), oracle_relation(r, s, t)),
                    "triple (", r, ",", s, ",", t, ")");
            }
        }
    }
}

TEST_CASE("eisenstein coefficient closed form") {
    // Vandermonde collapses each sum's E part to a single binomial:
    // c_E = -[(-1)^r C(k-1,r-1) + (-1)^s C(k-1,s-1) + (-1)^t C(k-1,t-1)].
    for (int k = 4; k <= 20; k += 2) {
        for (int r = 1; r < k; ++r) {
            for (int s = 1; s <= k - r; ++s) {
                const int t = k + 1 - r - s;
                const long expected = -((r % 2 == 0 ? 1 : -1) * pascal(k - 1, r - 1) +
                                        (s % 2 == 0 ? 1 : -1) * pascal(k - 1, s - 1) +
                                        (t % 2 == 0 ? 1 : -1) * pascal(k - 1, t - 1));
                CHECK(relation_vector(Triple(r, s, t)).eisenstein_coefficient() ==
                      Rational(expected));
            }
        }
    }
}

TEST_CASE("odd combined weight gives the zero vector") {
    for (int k = 3; k <= 15; k += 2) {
        for (int r = 1; r < k; ++r) {
            for (int s = 1; s <= k - r; ++s) {
                const int t = k + 1 - r - s;
                CHECK(relation_vector(Triple(r, s, t)).is_zero());
            }
        }
    }
}

TEST_CASE("cyclic shifts agree up to sign") {
    for (int k = 4; k <= 20; k += 2) {
        for (int r = 1; r < k; ++r) {
            for (int s = 1; s <= k - r; ++s) {
                const int t = k + 1 - r - s;
                const RelationVector a = relation_vector(Triple(r, s, t));
                const RelationVector b = relation_vector(Triple(s, t, r));
                const auto ratio = proportionality_ratio(a, b);
                REQUIRE(ratio.has_value());
                CHECK((*ratio == Rational(1) || *ratio == Rational(-1)));
            }
        }
    }
}

TEST_CASE("indices >= 3 never touch the weight-2 product") {
    for (int k = 8; k <= 20; k += 2) {
        for (int r = 3; r < k; ++r) {
            for (int s = 3; s <= k - r - 2; ++s) {
                const int t = k + 1 - r - s;
                if (t < 3) {
                    continue;
                }
                CHECK(relation_vector(Triple(r, s, t)).product_coefficient(2, k - 2) ==
                      Rational(0));
            }
        }
    }
}

TEST_CASE("evaluation vanishes") {
    CHECK(evaluate_relation(relation_vector(Triple(1, 2, 2)), 50).is_zero());
    CHECK(evaluate_relation(relation_vector(Triple(3, 3, 5)), 40).is_zero());
    CHECK(evaluate_relation(RelationVector(6), 12).is_zero());
    CHECK_THROWS_AS(evaluate_relation(RelationVector(6), 0), std::domain_error);
}

TEST_CASE("pair relation from its own formula") {
    CHECK(popa_relation(2, 2) == make_vector(4, -5, {{2, 2, 1}}));
    CHECK(popa_relation(2, 2).normalized() ==
          relation_vector(Triple(2, 2, 1)).normalized());

    // frozen: for (4,8) the E coefficient collects to -(C(12,4) - 1)
    CHECK(popa_relation(4, 8).eisenstein_coefficient() == Rational(-494));

    CHECK_THROWS_AS(popa_relation(2, 3), std::domain_error);
    CHECK_THROWS_AS(popa_relation(1, 1), std::domain_error);
    CHECK_THROWS_AS(popa_relation(0, 4), std::domain_error);
}

TEST_CASE("pair relation matches the triple construction up to scale") {
    for (int k = 4; k <= 30; k += 2) {
        for (int r = 1; r < k; ++r) {
            const int s = k - r;
            const auto ratio =
                proportionality_ratio(relation_vector(Triple(r, s, 1)), popa_relation(r, s));
            REQUIRE_MESSAGE(ratio.has_value(), "pair (", r, ",", s, ")");
            CHECK_FALSE(ratio->is_zero());
        }
    }
}

TEST_CASE("pair relation constant") {
    CHECK(popa_constant(2, 2) == Rational(5));
    CHECK(popa_constant(4, 8) == Rational(494));
    CHECK(popa_constant(3, 3) == Rational(21));
    for (int k = 4; k <= 40; k += 2) {
        for (int r = 1; r < k; ++r) {
            const int s = k - r;
            CHECK(popa_constant(r, s) == -popa_relation(r, s).eisenstein_coefficient());
        }
    }
    CHECK_THROWS_AS(popa_constant(1, 2), std::domain_error);
}

TEST_CASE("elimination triples") {
    const Triple a = elimination_triple(2, 12);
    CHECK(a.r == 3);
    CHECK(a.s == 3);
    CHECK(a.t == 7);
    const Triple b = elimination_triple(3, 20);
    CHECK(b.r == 5);
    CHECK(b.s == 5);
    CHECK(b.t == 11);
    for (int k = 8; k <= 40; k += 2) {
        for (int i = 2; i <= (k - 2) / 6 + 1; ++i) {
            const Triple t = elimination_triple(i, k);
            CHECK(t.r % 2 == 1);
            CHECK(t.s % 2 == 1);
            CHECK(t.t % 2 == 1);
            CHECK(t.r + t.s + t.t == k + 1);
        }
    }
    CHECK(relation_vector(elimination_triple(2, 12)).product_coefficient(4, 8) ==
          Rational(-168));

    CHECK_THROWS_AS(elimination_triple(1, 12), std::domain_error);
    CHECK_THROWS_AS(elimination_triple(3, 12), std::domain_error);
    CHECK_THROWS_AS(elimination_triple(2, 13), std::domain_error);
    CHECK_THROWS_AS(elimination_triple(2, 6), std::domain_error);
}

TEST_CASE("relation matrix") {
    using eisrel::rref;

    const auto m4 = relation_matrix(4);
    CHECK(m4.rows() == 6);
    CHECK(m4.cols() == 2);
    for (std::size_t row = 0; row < m4.rows(); ++row) {
        // every nonzero row proportional to (5, -1)
        CHECK(m4.at(row, 0) * Rational(-1) == m4.at(row, 1) * Rational(5));
    }
    CHECK(rref(m4).rank == 1);

    CHECK(rref(relation_matrix(12)).rank == 2);

    CHECK(eisrel::relation_matrix_labels(12) ==
          std::vector<std::string>{"E12", "P2,10", "P4,8", "P6,6"});

    CHECK_THROWS_AS(relation_matrix(13), std::domain_error);
    CHECK_THROWS_AS(relation_matrix(2), std::domain_error);
}

TEST_CASE("normalization") {
    const RelationVector v = relation_vector(Triple(1, 2, 2));
    const RelationVector n = v.normalized();
    CHECK(n.eisenstein_coefficient() == Rational(1));
    CHECK(n.product_coefficient(2, 2) == Rational(-1, 5));
    CHECK(RelationVector(6).normalized().is_zero());
    // normalization is idempotent
    CHECK(n.normalized() == n);
}

TEST_CASE("proportionality corner cases") {
    const RelationVector zero(4);
    CHECK(proportionality_ratio(zero, zero) == Rational(1));
    CHECK_FALSE(proportionality_ratio(zero, relation_vector(Triple(1, 2, 2))).has_value() ==
                false);  // ratio 0 exists
    CHECK(*proportionality_ratio(zero, relation_vector(Triple(1, 2, 2))) == Rational(0));
    CHECK_FALSE(proportionality_ratio(relation_vector(Triple(1, 2, 2)), zero).has_value());
    CHECK_FALSE(
        proportionality_ratio(relation_vector(Triple(1, 2, 2)), relation_vector(Triple(3, 3, 3)))
            .has_value());
}

TEST_CASE("parallel verification of one weight") {
    // every relation of weight 12 checked concurrently; exercises the
    // shared Bernoulli memo under contention
    std::vector<std::thread> workers;
    std::vector<bool> ok(4, false);
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            bool all_zero = true;
            for (int r = 1 + w; r < 12; r += 4) {
                for (int s = 1; s <= 12 - r; ++s) {
                    const Triple t(r, s, 13 - r - s);
                    all_zero = all_zero && evaluate_relation(relation_vector(t), 20).is_zero();
                }
            }
            ok[static_cast<std::size_t>(w)] = all_zero;
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    for (const bool flag : ok) {
        CHECK(flag);
    }
}

TEST_CASE("text format") {
    CHECK(to_text(relation_vector(Triple(1, 2, 2))) == "k=4\nE: -5\nP 2 2: 1\n");
    CHECK(to_text(RelationVector(7)) == "k=7\n");
    CHECK(to_text(relation_vector(Triple(3, 3, 7))) ==
          "k=12\nE: 572\nP 4 8: -168\nP 6 6: -100\n");
}

}  // TEST_SUITE
