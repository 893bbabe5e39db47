#pragma once

#include <span>
#include <string>
#include <vector>

#include "chow/affine.hpp"
#include "chow/bernoulli.hpp"
#include "chow/errors.hpp"
#include "chow/matrix.hpp"
#include "chow/oneps.hpp"
#include "chow/sampling.hpp"

namespace chow {

namespace detail {

/// Multiplies `acc` (truncated series, acc[j] = coefficient of x^j) by the
/// Todd series S(w x) in place.
inline void multiply_todd_factor(std::vector<Rational>& acc, const Rational& weight,
                                 const std::vector<Rational>& series) {
    const std::size_t order = acc.size();
    std::vector<Rational> weight_pow(order, Rational(1));
    for (std::size_t j = 1; j < order; ++j) weight_pow[j] = weight_pow[j - 1] * weight;

    std::vector<Rational> out(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (acc[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order; ++j)
            out[i + j] += acc[i] * series[j] * weight_pow[j];
    }
    acc = std::move(out);
}

}  // namespace detail

/// Degree-ell coefficient of prod_i S(w_i x), where S is the Todd series
/// y/(1 - e^{-y}). This is the ell-th Todd polynomial evaluated on the
/// weight multiset: Td_0 = 1, Td_1 = (sum w)/2, Td_2 = ((sum w)^2 + e_2)/12.
inline Rational todd_eval(std::span<const Rational> weights, unsigned ell) {
    const auto series = todd_series(ell);
    std::vector<Rational> acc(ell + 1);
    acc[0] = Rational(1);
    for (const auto& w : weights) detail::multiply_todd_factor(acc, w, series);
    return acc[ell];
}

/// All weight data of one fixed point evaluated at one sample, with the Todd
/// coefficients of the tangent weights precomputed up to a degree cap.
/// `todd_ext` carries the same product with one extra weight 1, the tangent
/// direction transverse to the central fiber in a product test configuration.
struct PointEval {
    std::vector<Rational> weights;
    Rational weight_product;
    std::vector<Rational> line_powers;  // line_powers[d] = (sum w)^d
    std::vector<Rational> todd;         // todd[j] = Td_j of the weights
    std::vector<Rational> todd_ext;     // with the extra weight 1
};

/// One sample's evaluation across all fixed points.
struct SampleEval {
    std::vector<PointEval> points;

    static SampleEval evaluate(const std::vector<FixedPointData>& fixed_points,
                               const Sample& sample, unsigned max_degree) {
        const auto series = todd_series(max_degree);
        SampleEval ev;
        ev.points.reserve(fixed_points.size());
        for (const auto& fp : fixed_points) {
            PointEval pe;
            pe.weights.reserve(fp.weights.size());
            pe.weight_product = Rational(1);
            Rational line;
            for (const auto& w : fp.weights) {
                Rational value = w.eval(sample);
                if (value.is_zero())
                    throw ConsistencyError("tangent weight vanished at a sample that "
                                           "passed the genericity check");
                line += value;
                pe.weight_product *= value;
                pe.weights.push_back(std::move(value));
            }
            pe.line_powers.resize(max_degree + 2);
            pe.line_powers[0] = Rational(1);
            for (std::size_t d = 1; d < pe.line_powers.size(); ++d)
                pe.line_powers[d] = pe.line_powers[d - 1] * line;

            pe.todd.assign(max_degree + 1, Rational(0));
            pe.todd[0] = Rational(1);
            for (const auto& w : pe.weights)
                detail::multiply_todd_factor(pe.todd, w, series);
            pe.todd_ext = pe.todd;
            detail::multiply_todd_factor(pe.todd_ext, Rational(1), series);
            ev.points.push_back(std::move(pe));
        }
        return ev;
    }

    /// sum over fixed points of (sum w)^d * Td_ell(w) / prod w.
    Rational residue(unsigned d, unsigned ell) const {
        Rational acc;
        for (const auto& pe : points)
            acc += pe.line_powers[d] * pe.todd[ell] / pe.weight_product;
        return acc;
    }

    /// Same, but with the Todd factor of the extra transverse weight 1:
    /// sum of (sum w)^d * Td_ell({1} u w) / prod w.
    Rational residue_ext(unsigned d, unsigned ell) const {
        Rational acc;
        for (const auto& pe : points)
            acc += pe.line_powers[d] * pe.todd_ext[ell] / pe.weight_product;
        return acc;
    }
};

/// One term of the Bott residue formula per fixed point, evaluated at a
/// parameter sample: sum_q (sum w)^c1_power * Td_{todd_degree}(w) / prod w.
inline Rational residue_sum(const std::vector<FixedPointData>& fixed_points,
                            const Sample& sample, unsigned c1_power,
                            unsigned todd_degree) {
    return SampleEval::evaluate(fixed_points, sample, todd_degree)
        .residue(c1_power, todd_degree);
}

/// Shared evaluation context: fixed points, sample plan, and the per-sample
/// localization tables (computed once, reused by every coefficient).
class LocalizationContext {
public:
    LocalizationContext(std::vector<FixedPointData> fixed_points, ParameterList params,
                        SamplePlan plan, unsigned dim)
        : fixed_points_(std::move(fixed_points)),
          params_(std::move(params)),
          plan_(std::move(plan)),
          dim_(dim) {
        for (const auto& s : plan_.samples)
            sample_evals_.push_back(SampleEval::evaluate(fixed_points_, s, dim_ + 1));
        for (const auto& s : plan_.checks)
            check_evals_.push_back(SampleEval::evaluate(fixed_points_, s, dim_ + 1));
    }

    unsigned dim() const { return dim_; }
    const ParameterList& params() const { return params_; }
    const SamplePlan& plan() const { return plan_; }
    const std::vector<FixedPointData>& fixed_points() const { return fixed_points_; }

    /// Applies `f : SampleEval -> Rational` to every sample (solve samples
    /// first, then checks) and returns the values.
    template <typename F>
    std::vector<Rational> evaluate_all(F&& f) const {
        std::vector<Rational> values;
        values.reserve(sample_evals_.size() + check_evals_.size());
        for (const auto& ev : sample_evals_) values.push_back(f(ev));
        for (const auto& ev : check_evals_) values.push_back(f(ev));
        return values;
    }

    const Sample& sample_at(std::size_t i) const {
        return i < plan_.samples.size() ? plan_.samples[i]
                                        : plan_.checks[i - plan_.samples.size()];
    }
    std::size_t total_samples() const {
        return plan_.samples.size() + plan_.checks.size();
    }

    /// Reconstructs the unique constant-plus-linear form matching the given
    /// per-sample values: exact solve on the first p+1 samples, exact
    /// verification on every remaining sample. A mismatch means the quantity
    /// is not affine in the parameters, which only a bug can cause.
    AffineForm reconstruct_affine(const std::vector<Rational>& values,
                                  const std::string& what) const {
        const std::size_t p = params_.size();
        QMatrix a(p + 1, p + 1);
        QMatrix rhs(p + 1, 1);
        for (std::size_t i = 0; i <= p; ++i) {
            a(i, 0) = Rational(1);
            for (std::size_t j = 0; j < p; ++j)
                a(i, j + 1) = plan_.samples[i].at(params_.names[j]);
            rhs(i, 0) = values[i];
        }
        const QMatrix x = solve_many(a, rhs);
        AffineForm form(x(0, 0));
        for (std::size_t j = 0; j < p; ++j)
            form += AffineForm::variable(params_.names[j], x(j + 1, 0));

        for (std::size_t i = p + 1; i < total_samples(); ++i) {
            if (form.eval(sample_at(i)) != values[i])
                throw ConsistencyError(what + ": reconstructed form disagrees with a "
                                              "verification sample (" +
                                       form.eval(sample_at(i)).str() + " vs " +
                                       values[i].str() + ")");
        }
        return form;
    }

private:
    std::vector<FixedPointData> fixed_points_;
    ParameterList params_;
    SamplePlan plan_;
    unsigned dim_;
    std::vector<SampleEval> sample_evals_;
    std::vector<SampleEval> check_evals_;
};

/// Builds the full localization context for a fan and subgroup.
inline LocalizationContext make_context(const Fan& fan,
                                        const std::vector<AffineForm>& lambda,
                                        const ParameterList& params, std::size_t count,
                                        std::uint64_t seed) {
    auto fixed_points = tangent_weights(fan, lambda);
    auto plan = make_sample_plan(fixed_points, params, count, seed);
    return LocalizationContext(std::move(fixed_points), params, std::move(plan),
                               static_cast<unsigned>(fan.dim()));
}

/// Expansion coefficient a_ell of the section count in powers of the twist:
/// a_ell = (1/(n-ell)!) sum_q (sum w)^{n-ell} Td_ell(w) / prod w.
/// A Chern number: it must agree at every sample, and does unless the
/// computation is broken.
inline Rational compute_a(const LocalizationContext& ctx, unsigned ell) {
    const unsigned n = ctx.dim();
    if (ell > n) throw std::invalid_argument("compute_a: ell out of range");
    const auto values =
        ctx.evaluate_all([&](const SampleEval& ev) { return ev.residue(n - ell, ell); });
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] != values[0])
            throw ConsistencyError("a_" + std::to_string(ell) +
                                   " differs between samples: " + values[0].str() +
                                   " vs " + values[i].str());
    return values[0] / factorial(n - ell);
}

/// Expansion coefficient b_ell of the total action weight: the homogeneous
/// linear form matching (1/(n-ell+1)!) sum_q (sum w)^{n-ell+1} Td_ell(w)/prod w
/// at every sample. Reconstructed by sampling and exact solve; the constant
/// term must come out zero.
inline AffineForm compute_b(const LocalizationContext& ctx, unsigned ell) {
    const unsigned n = ctx.dim();
    if (ell > n) throw std::invalid_argument("compute_b: ell out of range");
    const Rational scale = Rational(1) / factorial(n - ell + 1);
    const auto values = ctx.evaluate_all(
        [&](const SampleEval& ev) { return ev.residue(n - ell + 1, ell) * scale; });
    AffineForm form =
        ctx.reconstruct_affine(values, "b_" + std::to_string(ell));
    if (!form.constant().is_zero())
        throw ConsistencyError("b_" + std::to_string(ell) +
                               " has a nonzero constant part: " + form.constant().str());
    return form;
}

}  // namespace chow
