#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chow/errors.hpp"
#include "chow/matrix.hpp"
#include "chow/polytope.hpp"

namespace chow {

/// One full-dimensional cone of the face fan, spanned by the vertices of one
/// facet. Corresponds bijectively to a torus-fixed point.
struct MaximalCone {
    std::vector<std::size_t> vertex_indices;  // ascending, 0-based
    QMatrix generators;                       // n x n, generators as columns
    Rational generator_det;
};

struct Fan {
    FanoPolytope polytope;
    std::vector<MaximalCone> cones;

    int dim() const { return polytope.dim; }

    const MaximalCone* find_cone(const std::vector<std::size_t>& indices) const {
        for (const auto& c : cones)
            if (c.vertex_indices == indices) return &c;
        return nullptr;
    }
};

namespace detail {

struct Hyperplane {
    std::vector<BigInt> normal;  // primitive
    BigInt offset;               // > 0, so the origin is strictly inside
};

/// The unique hyperplane through the given vertices, oriented so the origin
/// lies on the < side with offset > 0. Returns false when the vertices do not
/// span a unique hyperplane or when it passes through the origin.
inline bool hyperplane_through(const FanoPolytope& p,
                               const std::vector<std::size_t>& subset,
                               Hyperplane& out) {
    const int n = p.dim;
    QMatrix m(subset.size(), n + 1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = Rational(p.vertices[subset[i]][j]);
        m(i, n) = Rational(-1);
    }
    const auto basis = nullspace(std::move(m));
    if (basis.size() != 1) return false;

    // Scale the rational solution (a, c) to a primitive integer vector.
    const auto& v = basis[0];
    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, x.denominator());
    std::vector<BigInt> w(v.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].numerator() * (l / v[i].denominator());
        g = boost::multiprecision::gcd(g, w[i]);
    }
    for (auto& x : w) x /= g;

    BigInt offset = w.back();
    w.pop_back();
    if (offset == 0) return false;
    if (offset < 0) {
        offset = -offset;
        for (auto& x : w) x = -x;
    }
    out = Hyperplane{std::move(w), std::move(offset)};
    return true;
}

inline BigInt dot(const std::vector<BigInt>& a, const LatticeVector& v) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * v[i];
    return acc;
}

}  // namespace detail

/// Enumerates the face fan of a Fano polytope: one maximal cone per facet of
/// the convex hull. Every n-subset of vertices is tested; a subset is a facet
/// iff it spans a unique hyperplane not through the origin with all other
/// vertices weakly on the origin side. Facets with more than n vertices
/// (non-simplicial) are rejected, and the result is validated to close up
/// around the origin: every ridge must be shared by exactly two facets.
inline Fan face_fan(const FanoPolytope& p) {
    const std::size_t n = static_cast<std::size_t>(p.dim);
    const std::size_t m = p.vertices.size();

    std::map<std::vector<BigInt>, std::vector<std::size_t>> facets;

    std::vector<std::size_t> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    const auto next_combination = [&]() -> bool {
        std::size_t i = n;
        while (i-- > 0) {
            if (subset[i] != i + m - n) {
                ++subset[i];
                for (std::size_t j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        detail::Hyperplane h;
        if (!detail::hyperplane_through(p, subset, h)) continue;

        std::vector<std::size_t> on_facet;
        bool supporting = true;
        for (std::size_t i = 0; i < m; ++i) {
            const BigInt value = detail::dot(h.normal, p.vertices[i]);
            if (value > h.offset) {
                supporting = false;
                break;
            }
            if (value == h.offset) on_facet.push_back(i);
        }
        if (!supporting) continue;
        if (on_facet.size() > n) {
            std::string list;
            for (const auto i : on_facet) list += " v" + std::to_string(i + 1);
            throw InputError("non-simplicial facet: " + std::to_string(on_facet.size()) +
                             " vertices on one facet (" + list + " )");
        }

        std::vector<BigInt> key = h.normal;
        key.push_back(h.offset);
        facets.emplace(std::move(key), std::move(on_facet));
    } while (next_combination());

    if (facets.empty()) throw InputError("degenerate input: no facets found");

    // Closure check: in a complete simplicial face fan each ridge (facet
    // minus one vertex) is shared by exactly two facets. This fails exactly
    // when the origin is not strictly interior to the hull.
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (const auto& [key, idx] : facets) {
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
            std::vector<std::size_t> ridge;
            for (std::size_t i = 0; i < idx.size(); ++i)
                if (i != drop) ridge.push_back(idx[i]);
            ++ridge_count[ridge];
        }
    }
    for (const auto& [ridge, count] : ridge_count) {
        if (count != 2)
            throw InputError(
                "face fan does not close up around the origin (the origin is "
                "not strictly interior)");
    }

    std::vector<bool> used(m, false);
    Fan fan{p, {}};
    for (const auto& [key, idx] : facets) {
        MaximalCone cone;
        cone.vertex_indices = idx;
        cone.generators = QMatrix(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            used[idx[j]] = true;
            for (std::size_t i = 0; i < n; ++i)
                cone.generators(i, j) = Rational(p.vertices[idx[j]][i]);
        }
        cone.generator_det = det(cone.generators);
        fan.cones.push_back(std::move(cone));
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!used[i])
            throw InputError("vertex " + std::to_string(i + 1) +
                             " lies on no facet; input is not the vertex set of a "
                             "Fano polytope");

    std::sort(fan.cones.begin(), fan.cones.end(),
              [](const MaximalCone& a, const MaximalCone& b) {
                  return a.vertex_indices < b.vertex_indices;
              });
    return fan;
}

struct SmoothnessReport {
    std::vector<Rational> cone_dets;  // aligned with Fan::cones
    bool smooth = false;
};

/// A toric variety is smooth iff every maximal cone is unimodular.
inline SmoothnessReport check_smooth(const Fan& fan) {
    SmoothnessReport report;
    report.smooth = true;
    for (const auto& c : fan.cones) {
        report.cone_dets.push_back(c.generator_det);
        if (abs(c.generator_det) != Rational(1)) report.smooth = false;
    }
    return report;
}

/// Rows of the result are the dual basis u_1..u_n of the cone's generators:
/// U V = I. Only defined for unimodular cones.
inline QMatrix dual_basis(const MaximalCone& cone) {
    if (abs(cone.generator_det) != Rational(1))
        throw InputError("dual_basis: cone is not unimodular (|det| = " +
                         abs(cone.generator_det).str() + ")");
    return inverse(cone.generators);
}

}  // namespace chow
