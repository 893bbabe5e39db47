#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chow/matrix.hpp"

using chow::QMatrix;
using chow::Rational;

namespace {

QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<std::int64_t>(rng() % 11) - 5);
    return m;
}

// Random unimodular matrix: product of elementary row operations on I.
QMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    QMatrix m = QMatrix::identity(n);
    for (int step = 0; step < 25; ++step) {
        const std::size_t i = rng() % n;
        const std::size_t j = rng() % n;
        if (i == j) continue;
        const Rational f(static_cast<std::int64_t>(rng() % 5) - 2);
        for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(chow::det(QMatrix::identity(3)) == Rational(1));

    QMatrix m(2, 2);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(0);
    m(1, 0) = Rational(-1);
    m(1, 1) = Rational(-1);
    CHECK(chow::det(m) == Rational(-1));

    QMatrix rect(2, 3);
    CHECK_THROWS_AS(chow::det(rect), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const QMatrix a = random_int_matrix(rng, 4);
        const QMatrix b = random_int_matrix(rng, 4);
        CHECK(chow::det(a * b) == chow::det(a) * chow::det(b));
    }
}

TEST_CASE("determinant handles rational entries") {
    QMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(1, 4);
    m(1, 1) = Rational(1, 5);
    CHECK(chow::det(m) == Rational(1, 10) - Rational(1, 12));
}

TEST_CASE("solve basics") {
    const QMatrix id = QMatrix::identity(3);
    const std::vector<Rational> b{Rational(3), Rational(-1, 2), Rational(7)};
    CHECK(chow::solve(id, b) == b);

    QMatrix d(2, 2);
    d(0, 0) = Rational(2);
    d(1, 1) = Rational(4);
    const auto x = chow::solve(d, {Rational(1), Rational(1)});
    CHECK(x == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});

    QMatrix singular(2, 2);
    singular(0, 0) = Rational(1);
    singular(0, 1) = Rational(2);
    singular(1, 0) = Rational(2);
    singular(1, 1) = Rational(4);
    CHECK_THROWS_AS(chow::solve(singular, {Rational(1), Rational(0)}),
                    chow::ConsistencyError);
}

TEST_CASE("solve round-trips on random unimodular systems") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const QMatrix a = random_unimodular(rng, 5);
        std::vector<Rational> b;
        for (int i = 0; i < 5; ++i)
            b.emplace_back(static_cast<std::int64_t>(rng() % 19) - 9,
                           static_cast<std::int64_t>(rng() % 5) + 1);
        const auto x = chow::solve(a, b);
        for (std::size_t i = 0; i < 5; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < 5; ++j) acc += a(i, j) * x[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("inverse against identity") {
    std::mt19937_64 rng(5);
    const QMatrix a = random_unimodular(rng, 4);
    CHECK(a * chow::inverse(a) == QMatrix::identity(4));
    CHECK(chow::inverse(a) * a == QMatrix::identity(4));
}

TEST_CASE("rank and nullspace") {
    QMatrix m(2, 3);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(0, 2) = Rational(3);
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(4);
    m(1, 2) = Rational(6);
    CHECK(chow::rank(m) == 1);
    const auto basis = chow::nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Rational acc;
        for (std::size_t j = 0; j < 3; ++j) acc += m(0, j) * v[j];
        CHECK(acc.is_zero());
    }

    CHECK(chow::rank(QMatrix::identity(4)) == 4);
    CHECK(chow::nullspace(QMatrix::identity(4)).empty());
}
