#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chow/rational.hpp"

using chow::BigInt;
using chow::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto den = static_cast<std::int64_t>(rng() % 50) + 1;
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-14, 7).str() == "-2");
    CHECK(Rational(3, 9).str() == "1/3");
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational string round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = random_rational(rng);
        CHECK(Rational::from_string(a.str()) == a);
    }
    CHECK(Rational::from_string("-68/45") == Rational(-68, 45));
    CHECK(Rational::from_string("13047715") == Rational(13047715));
    CHECK_THROWS_AS(Rational::from_string("1/"), chow::InputError);
    CHECK_THROWS_AS(Rational::from_string("x"), chow::InputError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), chow::InputError);
    CHECK_THROWS_AS(Rational::from_string(""), chow::InputError);
}

TEST_CASE("rational edge operations") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-4, 2).floor() == -2);
    CHECK(Rational(-4, 2).ceil() == -2);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(0) == Rational(1));
    CHECK(chow::abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(chow::factorial(7) == Rational(5040));
    CHECK(chow::binomial(7, 3) == Rational(35));
}
