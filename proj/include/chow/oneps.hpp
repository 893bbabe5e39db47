#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chow/affine.hpp"
#include "chow/errors.hpp"
#include "chow/fan.hpp"

namespace chow {

/// One-parameter subgroup given through a reference chart: the listed cone's
/// affine coordinates carry the listed parameters as weights, in order.
struct ChartSpec {
    std::vector<std::size_t> cone_vertex_indices;  // ascending, 0-based
    std::vector<std::string> parameters;
};

/// A one-parameter subgroup: either explicit coordinates in the cocharacter
/// lattice (tensored with the parameter space), or a chart description.
struct OnePSSpec {
    std::variant<std::vector<AffineForm>, ChartSpec> value;

    static OnePSSpec explicit_lambda(std::vector<AffineForm> coords) {
        return OnePSSpec{std::move(coords)};
    }
    static OnePSSpec chart(ChartSpec c) { return OnePSSpec{std::move(c)}; }
};

/// Lattice coordinates of the subgroup. For a chart spec this is
/// lambda = sum_j p_j * v_{r_j} over the reference cone's generators: by
/// duality <u_i, v_j> = delta_ij, the chart coordinates then carry exactly
/// the declared parameter weights.
inline std::vector<AffineForm> resolve_lambda(const OnePSSpec& spec, const Fan& fan) {
    const std::size_t n = static_cast<std::size_t>(fan.dim());

    if (const auto* coords = std::get_if<std::vector<AffineForm>>(&spec.value)) {
        if (coords->size() != n)
            throw InputError("explicit subgroup has " + std::to_string(coords->size()) +
                             " coordinates, expected " + std::to_string(n));
        for (const auto& c : *coords)
            if (!c.constant().is_zero())
                throw InputError(
                    "explicit subgroup coordinates must be homogeneous linear in "
                    "the declared parameters (no constant part)");
        return *coords;
    }

    const auto& chart = std::get<ChartSpec>(spec.value);
    if (chart.cone_vertex_indices.size() != n || chart.parameters.size() != n)
        throw InputError("chart must list exactly " + std::to_string(n) +
                         " vertex indices and parameters");
    const MaximalCone* cone = fan.find_cone(chart.cone_vertex_indices);
    if (cone == nullptr) {
        std::string list;
        for (const auto i : chart.cone_vertex_indices) list += " " + std::to_string(i + 1);
        throw InputError("chart vertices (" + list + " ) do not span a maximal cone");
    }
    if (abs(cone->generator_det) != Rational(1))
        throw InputError("chart cone is not unimodular; its coordinates are not a "
                         "lattice basis");

    std::vector<AffineForm> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        const AffineForm p = AffineForm::variable(chart.parameters[j]);
        for (std::size_t i = 0; i < n; ++i)
            lambda[i] += p * cone->generators(i, j);
    }
    return lambda;
}

/// Weight data of the torus action at one fixed point: the tangent weights
/// w_i = <u_i, lambda> in the cone's dual basis, and the fiber weight of the
/// induced action on the anticanonical bundle, which for the canonical lift
/// is the sum of the tangent weights.
struct FixedPointData {
    std::size_t cone_index = 0;
    std::vector<AffineForm> weights;
    AffineForm line_weight;
};

inline std::vector<FixedPointData> tangent_weights(const Fan& fan,
                                                   const std::vector<AffineForm>& lambda) {
    const std::size_t n = static_cast<std::size_t>(fan.dim());
    if (lambda.size() != n)
        throw InputError("subgroup coordinate count does not match the fan dimension");

    std::vector<FixedPointData> points;
    points.reserve(fan.cones.size());
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const QMatrix u = dual_basis(fan.cones[c]);
        FixedPointData fp;
        fp.cone_index = c;
        fp.weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                fp.weights[i] += lambda[j] * u(i, j);
            fp.line_weight += fp.weights[i];
        }
        points.push_back(std::move(fp));
    }
    return points;
}

inline std::vector<AffineForm> scale_lambda(std::vector<AffineForm> lambda,
                                            const Rational& c) {
    for (auto& coord : lambda) coord *= c;
    return lambda;
}

}  // namespace chow
