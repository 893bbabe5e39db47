#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chow/affine.hpp"
#include "chow/errors.hpp"
#include "chow/matrix.hpp"
#include "chow/oneps.hpp"

namespace chow {

/// Parameter samples for numeric reconstruction. Every sample is generic
/// (no tangent weight vanishes on it), and the first size()+1 samples form
/// an invertible affine evaluation system, so constant-plus-linear
/// reconstruction never hits a singular solve. `checks` are additional
/// verification-only samples.
struct SamplePlan {
    std::vector<Sample> samples;
    std::vector<Sample> checks;
};

namespace detail {

/// Incremental rank tracker over rational row vectors.
class RankTracker {
public:
    explicit RankTracker(std::size_t cols) : cols_(cols) {}

    bool try_add(std::vector<Rational> row) {
        for (const auto& pivot : echelon_) {
            const std::size_t c = pivot.first;
            if (row[c].is_zero()) continue;
            const Rational f = row[c];
            for (std::size_t j = 0; j < cols_; ++j)
                row[j] -= f * pivot.second[j];
        }
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == cols_) return false;
        const Rational inv = Rational(1) / row[lead];
        for (std::size_t j = 0; j < cols_; ++j) row[j] *= inv;
        echelon_.emplace_back(lead, std::move(row));
        return true;
    }

    std::size_t rank() const { return echelon_.size(); }

private:
    std::size_t cols_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> echelon_;
};

}  // namespace detail

/// Draws `count` generic samples plus two extra verification samples from a
/// seeded deterministic generator with small-integer values. Samples at which
/// some tangent weight vanishes are redrawn.
inline SamplePlan make_sample_plan(const std::vector<FixedPointData>& fixed_points,
                                   const ParameterList& params, std::size_t count,
                                   std::uint64_t seed) {
    const std::size_t p = params.size();
    if (count < p + 2)
        throw InputError("sample count must be at least parameters + 2 (got " +
                         std::to_string(count) + " for " + std::to_string(p) +
                         " parameters)");

    for (const auto& fp : fixed_points)
        for (const auto& w : fp.weights)
            if (w.is_zero())
                throw InputError(
                    "a tangent weight vanishes identically: the one-parameter "
                    "subgroup is degenerate (fixed points are not isolated)");

    std::mt19937_64 rng(seed);
    const auto draw_sample = [&]() {
        Sample s;
        for (const auto& name : params.names) {
            // Explicit mapping instead of a distribution: identical streams
            // on every platform.
            const auto r = static_cast<std::int64_t>(rng() % 19) - 9;
            s.emplace(name, Rational(r));
        }
        return s;
    };
    const auto generic = [&](const Sample& s) {
        for (const auto& fp : fixed_points)
            for (const auto& w : fp.weights)
                if (w.eval(s).is_zero()) return false;
        return true;
    };

    SamplePlan plan;
    detail::RankTracker tracker(p + 1);
    std::size_t attempts_left = 512 + 64 * (count + 2);
    const auto next_generic = [&]() {
        while (attempts_left-- > 0) {
            Sample s = draw_sample();
            if (generic(s)) return s;
        }
        throw InputError("failed to draw generic parameter samples; the subgroup "
                         "is too degenerate");
    };

    // Solve block: p+1 samples whose affine evaluation matrix [1 | s] is
    // invertible.
    while (tracker.rank() < p + 1) {
        if (attempts_left == 0)
            throw InputError("failed to draw independent parameter samples");
        Sample s = next_generic();
        std::vector<Rational> row;
        row.reserve(p + 1);
        row.emplace_back(1);
        for (const auto& name : params.names) row.push_back(s.at(name));
        if (tracker.try_add(std::move(row))) plan.samples.push_back(std::move(s));
    }
    while (plan.samples.size() < count) plan.samples.push_back(next_generic());
    plan.checks.push_back(next_generic());
    plan.checks.push_back(next_generic());
    return plan;
}

}  // namespace chow
