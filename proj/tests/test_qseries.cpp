#include <doctest.h>

#include <cstdint>
#include <vector>

#include "eisrel/qseries.hpp"

using eisrel::eisenstein;
using eisrel::eisenstein_product;
using eisrel::QSeries;
using eisrel::Rational;
using eisrel::theta_derivative;

namespace {

QSeries make(std::vector<long> cs) {
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (const long c : cs) {
        out.emplace_back(c);
    }
    return QSeries(std::move(out));
}

struct Lcg {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    QSeries series(std::size_t precision) {
        std::vector<Rational> cs(precision);
        for (auto& c : cs) {
            c = Rational(static_cast<long>(next() % 41) - 20,
                         static_cast<long>(next() % 12) + 1);
        }
        return QSeries(std::move(cs));
    }
};

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("construction and zero") {
    const QSeries z = QSeries::zero(4);
    CHECK(z.precision() == 4);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(QSeries::zero(0), std::domain_error);
    CHECK_THROWS_AS(QSeries(std::vector<Rational>{}), std::domain_error);
}

TEST_CASE("multiplication") {
    const QSeries f = make({1, 1, 0});   // 1 + q
    const QSeries g = make({1, -1, 0});  // 1 - q
    CHECK(f * g == make({1, 0, -1}));

    const QSeries e2 = eisenstein(2, 2);
    const QSeries sq = e2 * e2;
    CHECK(sq.coeff(0) == Rational(1, 144));
    CHECK(sq.coeff(1) == Rational(-1, 3));

    CHECK((f * QSeries::zero(3)).is_zero());
}

TEST_CASE("precision of mixed arithmetic is the minimum") {
    const QSeries f = make({1, 2, 3, 4, 5});
    const QSeries g = make({1, 1});
    CHECK((f + g).precision() == 2);
    CHECK((f * g).precision() == 2);
    CHECK((f - g).precision() == 2);
}

TEST_CASE("weight tags are advisory metadata") {
    const QSeries e4 = eisenstein(4, 5);
    CHECK(e4.weight() == 4);
    CHECK((e4 + e4).weight() == 4);
    CHECK((e4 * e4).weight() == 8);
    CHECK((e4 * Rational(3)).weight() == 4);
    // mixed weights are allowed and clear the tag
    CHECK_FALSE((e4 + eisenstein(6, 5)).weight().has_value());
    CHECK_FALSE((e4 + make({1, 1, 1, 1, 1})).weight().has_value());
    CHECK_FALSE(theta_derivative(e4).weight().has_value());
    // the tag never affects equality
    CHECK(e4.without_weight() == e4);
}

TEST_CASE("theta derivative") {
    CHECK(theta_derivative(QSeries::constant(Rational(7), 5)).is_zero());

    const QSeries e2 = eisenstein(2, 3);
    const QSeries d = theta_derivative(e2);
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(2));
    CHECK(d.coeff(2) == Rational(12));

    const QSeries q3 = make({0, 0, 0, 1});
    CHECK(theta_derivative(q3) == make({0, 0, 0, 3}));
}

TEST_CASE("eisenstein q-expansions") {
    CHECK(eisenstein(3, 10).is_zero());
    CHECK(eisenstein(1, 10).is_zero());

    const QSeries e4 = eisenstein(4, 3);
    CHECK(e4.coeff(0) == Rational(1, 720));
    CHECK(e4.coeff(1) == Rational(1, 3));
    CHECK(e4.coeff(2) == Rational(3));

    const QSeries e2 = eisenstein(2, 3);
    CHECK(e2.coeff(0) == Rational(-1, 12));
    CHECK(e2.coeff(1) == Rational(2));
    CHECK(e2.coeff(2) == Rational(6));

    CHECK_THROWS_AS(eisenstein(0, 5), std::domain_error);
    CHECK_THROWS_AS(eisenstein(-4, 5), std::domain_error);
    CHECK_THROWS_AS(eisenstein(4, 0), std::domain_error);
}

TEST_CASE("eisenstein prefix stability") {
    for (const int k : {2, 4, 9, 12}) {
        CHECK(eisenstein(k, 30).truncated(12) == eisenstein(k, 12));
    }
}

TEST_CASE("modular products") {
    // no correction fires away from weight 2
    CHECK(eisenstein_product(4, 4, 8) == eisenstein(4, 8) * eisenstein(4, 8));
    CHECK(eisenstein_product(3, 5, 8).is_zero());

    const QSeries p22 = eisenstein_product(2, 2, 2);
    CHECK(p22.coeff(0) == Rational(1, 144));
    CHECK(p22.coeff(1) == Rational(5, 3));
    CHECK(p22.weight() == 4);

    CHECK_THROWS_AS(eisenstein_product(0, 2, 4), std::domain_error);
}

TEST_CASE("product symmetry") {
    for (int r = 1; r <= 20; ++r) {
        for (int s = r; s <= 20; ++s) {
            CHECK(eisenstein_product(r, s, 10) == eisenstein_product(s, r, 10));
        }
    }
}

TEST_CASE("corrected square of the quasi-modular series") {
    // 5 E_4 = P_{2,2}: the derivative correction restores modularity.
    const QSeries lhs = eisenstein(4, 100) * Rational(5);
    CHECK((lhs - eisenstein_product(2, 2, 100)).is_zero());
}

TEST_CASE("multiplication is commutative and associative") {
    Lcg rng{0x2545f4914f6cdd1dULL};
    for (int round = 0; round < 5; ++round) {
        const QSeries f = rng.series(20);
        const QSeries g = rng.series(20);
        const QSeries h = rng.series(20);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("text format golden") {
    const QSeries e4 = eisenstein(4, 3);
    CHECK(to_text(e4) == "prec=3 weight=4\n0: 1/720\n1: 1/3\n2: 3\n");

    const QSeries untagged = make({1, 0, -2});
    CHECK(to_text(untagged) == "prec=3 weight=none\n0: 1\n1: 0\n2: -2\n");
}

TEST_CASE("text round trip") {
    Lcg rng{0xdeadbeefcafef00dULL};
    const QSeries f = rng.series(9);
    const QSeries parsed = eisrel::qseries_from_text(to_text(f));
    CHECK(parsed == f);
    CHECK(parsed.weight() == f.weight());
    CHECK(to_text(parsed) == to_text(f));

    const QSeries tagged = eisenstein(6, 7);
    const QSeries parsed_tagged = eisrel::qseries_from_text(to_text(tagged));
    CHECK(parsed_tagged == tagged);
    CHECK(parsed_tagged.weight() == 6);

    // "/1" also parses
    CHECK(eisrel::qseries_from_text("prec=1 weight=none\n0: 5/1\n") ==
          QSeries::constant(Rational(5), 1));
}

TEST_CASE("text parse errors") {
    CHECK_THROWS_AS(eisrel::qseries_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=2 weight=none\n0: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=1 weight=none\n1: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=0 weight=none\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=-3 weight=none\n0: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=2x weight=none\n0: 1\n1: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=1 weight=x\n0: 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=1\n0: 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(eisrel::qseries_from_text("prec=1 weight=none\n0: 1\njunk\n"),
                    std::invalid_argument);
}

}  // TEST_SUITE
