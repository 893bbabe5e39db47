#pragma once

#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Bernoulli numbers in the B_1 = +1/2 convention, i.e. the coefficients of
/// x/(1 - e^{-x}) = sum_k B_k^+ x^k / k!. This is the convention the Todd
/// generating series uses.
///
/// Computed from the recurrence obtained by multiplying the series with
/// (1 - e^{-x})/x:  sum_{j<=K} (-1)^{K-j} C(K+1, j) B_j^+ = 0 for K >= 1.
inline std::vector<Rational> bernoulli_plus(unsigned k_max) {
    std::vector<Rational> b;
    b.reserve(k_max + 1);
    b.push_back(Rational(1));
    for (unsigned k = 1; k <= k_max; ++k) {
        Rational acc;
        for (unsigned j = 0; j < k; ++j) {
            const Rational term = binomial(k + 1, j) * b[j];
            acc += ((k - j) % 2 == 0) ? term : -term;
        }
        b.push_back(-acc / Rational(k + 1));
    }
    return b;
}

/// Coefficients s_k = B_k^+ / k! of the Todd series S(y) = y/(1 - e^{-y}),
/// so that S(y) = sum_k s_k y^k. S(y) = 1 + y/2 + y^2/12 - y^4/720 + ...
inline std::vector<Rational> todd_series(unsigned k_max) {
    std::vector<Rational> s = bernoulli_plus(k_max);
    Rational fact(1);
    for (unsigned k = 1; k <= k_max; ++k) {
        fact *= Rational(static_cast<long long>(k));
        s[k] /= fact;
    }
    return s;
}

}  // namespace chow
