#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "chow/bernoulli.hpp"
#include "chow/localization.hpp"

using chow::Rational;

namespace {

// Independent oracle: the reciprocal of (1 - e^{-x})/x computed by series
// long division. (1 - e^{-x})/x = sum_m (-1)^m x^m / (m+1)!, so the Todd
// series coefficients s_k solve sum_{j<=k} s_j * d_{k-j} = [k == 0].
std::vector<Rational> todd_series_by_division(unsigned order) {
    std::vector<Rational> divisor(order + 1);
    Rational fact(1);
    for (unsigned m = 0; m <= order; ++m) {
        fact *= Rational(static_cast<long long>(m + 1));
        divisor[m] = Rational(m % 2 == 0 ? 1 : -1) / fact;
    }
    std::vector<Rational> s(order + 1);
    s[0] = Rational(1) / divisor[0];
    for (unsigned k = 1; k <= order; ++k) {
        Rational acc;
        for (unsigned j = 0; j < k; ++j) acc += s[j] * divisor[k - j];
        s[k] = -acc / divisor[0];
    }
    return s;
}

}  // namespace

TEST_CASE("bernoulli numbers in the plus convention") {
    CHECK(chow::bernoulli_plus(0) == std::vector<Rational>{Rational(1)});
    CHECK(chow::bernoulli_plus(2) ==
          std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 6)});
    const auto b = chow::bernoulli_plus(12);
    CHECK(b[3] == Rational(0));
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[5] == Rational(0));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("bernoulli numbers match the series division oracle") {
    const auto oracle = todd_series_by_division(14);
    const auto series = chow::todd_series(14);
    REQUIRE(series.size() == oracle.size());
    for (std::size_t k = 0; k < series.size(); ++k) CHECK(series[k] == oracle[k]);
}

TEST_CASE("single-weight Todd series starts 1 + w/2 + w^2/12 - w^4/720") {
    const Rational w(3, 2);
    const std::vector<Rational> weights{w};
    CHECK(chow::todd_eval(weights, 0) == Rational(1));
    CHECK(chow::todd_eval(weights, 1) == w / Rational(2));
    CHECK(chow::todd_eval(weights, 2) == w * w / Rational(12));
    CHECK(chow::todd_eval(weights, 3) == Rational(0));
    CHECK(chow::todd_eval(weights, 4) == -(w.pow(4)) / Rational(720));
}

TEST_CASE("todd_eval matches the closed forms in low degree") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational a(static_cast<std::int64_t>(rng() % 15) - 7,
                         static_cast<std::int64_t>(rng() % 4) + 1);
        const Rational b(static_cast<std::int64_t>(rng() % 15) - 7,
                         static_cast<std::int64_t>(rng() % 4) + 1);
        const std::vector<Rational> weights{a, b};
        CHECK(chow::todd_eval(weights, 0) == Rational(1));
        CHECK(chow::todd_eval(weights, 1) == (a + b) / Rational(2));
        CHECK(chow::todd_eval(weights, 2) == ((a + b) * (a + b) + a * b) / Rational(12));
    }
}

TEST_CASE("todd_eval is multiplicative over disjoint unions") {
    std::mt19937_64 rng(29);
    const auto rnd = [&rng] {
        return Rational(static_cast<std::int64_t>(rng() % 13) - 6,
                        static_cast<std::int64_t>(rng() % 3) + 1);
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> w1, w2;
        const unsigned n1 = 1 + rng() % 3;
        const unsigned n2 = 1 + rng() % 3;
        for (unsigned i = 0; i < n1; ++i) w1.push_back(rnd());
        for (unsigned i = 0; i < n2; ++i) w2.push_back(rnd());
        std::vector<Rational> both = w1;
        both.insert(both.end(), w2.begin(), w2.end());
        for (unsigned ell = 0; ell <= 5; ++ell) {
            Rational convolution;
            for (unsigned j = 0; j <= ell; ++j)
                convolution += chow::todd_eval(w1, j) * chow::todd_eval(w2, ell - j);
            CHECK(chow::todd_eval(both, ell) == convolution);
        }
    }
}
