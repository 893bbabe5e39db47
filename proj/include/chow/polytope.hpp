#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chow/errors.hpp"
#include "chow/matrix.hpp"

namespace chow {

using LatticeVector = std::vector<std::int64_t>;

/// A Fano polytope: primitive lattice vertices spanning R^n with the origin
/// in the interior. The interiority of the origin is established later, when
/// the face fan is enumerated; construction checks the local conditions.
struct FanoPolytope {
    int dim = 0;
    std::vector<LatticeVector> vertices;

    static FanoPolytope create(int dim, std::vector<LatticeVector> vertices) {
        if (dim < 1) throw InputError("polytope dimension must be positive");
        if (vertices.size() < static_cast<std::size_t>(dim) + 1)
            throw InputError("a Fano polytope needs at least dim+1 vertices");

        std::set<LatticeVector> seen;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto& v = vertices[i];
            if (v.size() != static_cast<std::size_t>(dim))
                throw InputError("vertex " + std::to_string(i + 1) + " has length " +
                                 std::to_string(v.size()) + ", expected " +
                                 std::to_string(dim));
            std::int64_t g = 0;
            for (const auto x : v) g = std::gcd(g, x);
            if (g != 1)
                throw InputError("vertex " + std::to_string(i + 1) +
                                 " is not a primitive lattice vector");
            if (!seen.insert(v).second)
                throw InputError("duplicate vertex at row " + std::to_string(i + 1));
        }

        QMatrix m(vertices.size(), dim);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (int j = 0; j < dim; ++j)
                m(i, j) = Rational(vertices[i][j]);
        if (rank(m) != static_cast<std::size_t>(dim))
            throw InputError("degenerate input: vertices do not span R^" +
                             std::to_string(dim));

        return FanoPolytope{dim, std::move(vertices)};
    }
};

/// H-representation {u : <normal_i, u> >= offset_i}.
struct DualPolytope {
    std::vector<LatticeVector> normals;
    std::vector<std::int64_t> offsets;
    int dim = 0;
};

/// The section polytope of the anticanonical bundle: one inequality
/// <u, v> >= -1 per vertex v. Its k-th dilate counts sections of -kK.
inline DualPolytope dual_polytope(const FanoPolytope& p) {
    DualPolytope q;
    q.dim = p.dim;
    q.normals = p.vertices;
    q.offsets.assign(p.vertices.size(), -1);
    return q;
}

}  // namespace chow
