#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chow/affine.hpp"

using chow::AffineForm;
using chow::ParameterList;
using chow::Rational;
using chow::Sample;

TEST_CASE("affine evaluation") {
    const AffineForm three(Rational(3));
    CHECK(three.eval({}) == Rational(3));
    CHECK(three.eval({{"anything", Rational(9)}}) == Rational(3));

    const AffineForm f = AffineForm::variable("alpha") - AffineForm::variable("beta");
    CHECK(f.eval({{"alpha", Rational(2)}, {"beta", Rational(5)}}) == Rational(-3));

    AffineForm s;
    for (const auto* name : {"alpha1", "alpha2", "alpha3"})
        s += AffineForm::variable(name);
    for (const auto* name : {"beta1", "beta2", "beta3"})
        s -= AffineForm::variable(name);
    s -= AffineForm::variable("gamma", Rational(2));
    const Sample point{{"alpha1", 1}, {"alpha2", 1}, {"alpha3", 1}, {"beta1", 0},
                       {"beta2", 0},  {"beta3", 0},  {"gamma", 1}};
    CHECK(s.eval(point) == Rational(1));
}

TEST_CASE("missing bindings are an error, not zero") {
    const AffineForm f = AffineForm::variable("x");
    CHECK_THROWS_AS(f.eval({{"y", Rational(1)}}), chow::InputError);
}

TEST_CASE("evaluation is linear") {
    std::mt19937_64 rng(3);
    const auto rnd = [&rng] {
        return Rational(static_cast<std::int64_t>(rng() % 21) - 10,
                        static_cast<std::int64_t>(rng() % 6) + 1);
    };
    for (int trial = 0; trial < 50; ++trial) {
        AffineForm f(rnd());
        AffineForm g(rnd());
        Sample point;
        for (const auto* name : {"x", "y", "z"}) {
            f += AffineForm::variable(name, rnd());
            g += AffineForm::variable(name, rnd());
            point.emplace(name, rnd());
        }
        const Rational c = rnd();
        CHECK((f + g).eval(point) == f.eval(point) + g.eval(point));
        CHECK((f * c).eval(point) == c * f.eval(point));
    }
}

TEST_CASE("zero coefficients are never stored") {
    AffineForm f = AffineForm::variable("x");
    f -= AffineForm::variable("x");
    CHECK(f.is_zero());
    CHECK(f.coefficients().empty());
    CHECK(f == AffineForm());

    const AffineForm g = AffineForm::variable("x", Rational(0));
    CHECK(g.is_zero());

    AffineForm h = AffineForm::variable("x") + AffineForm(Rational(2));
    h *= Rational(0);
    CHECK(h.is_zero());
}

TEST_CASE("parameter list rejects duplicates and formats in declared order") {
    CHECK_THROWS_AS(ParameterList::declare({"a", "a"}), chow::InputError);
    const auto params = ParameterList::declare({"b", "a"});
    const AffineForm f = AffineForm::variable("a") + AffineForm::variable("b", Rational(-2));
    CHECK(chow::format_affine(f, params) == "-2*b + a");
    CHECK(chow::format_affine(AffineForm(), params) == "0");
    CHECK(chow::format_affine(AffineForm(Rational(-3)) + AffineForm::variable("a"), params) ==
          "-3 + a");
}
