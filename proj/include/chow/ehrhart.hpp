#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/polytope.hpp"
#include "chow/rational.hpp"

namespace chow {

namespace detail {

/// System of inequalities <normal, x> >= offset over the first `vars`
/// coordinates. Normals are primitive integer vectors; offsets stay rational
/// because primitivization divides them.
struct SliceSystem {
    std::size_t vars = 0;
    std::vector<std::vector<BigInt>> normals;
    std::vector<Rational> offsets;
    bool infeasible = false;

    void add_row(std::vector<BigInt> normal, Rational offset,
                 std::map<std::vector<BigInt>, Rational>& tightest) {
        BigInt g = 0;
        for (const auto& x : normal) g = boost::multiprecision::gcd(g, x);
        if (g == 0) {
            if (offset > Rational(0)) infeasible = true;
            return;  // 0 >= nonpositive: trivially true
        }
        if (g != 1) {
            for (auto& x : normal) x /= g;
            offset /= Rational(g);
        }
        const auto it = tightest.find(normal);
        if (it == tightest.end()) {
            tightest.emplace(normal, offset);
        } else if (offset > it->second) {
            it->second = offset;
        }
    }

    void finish(const std::map<std::vector<BigInt>, Rational>& tightest) {
        for (const auto& [normal, offset] : tightest) {
            normals.push_back(normal);
            offsets.push_back(offset);
        }
    }
};

/// Projects out the last variable by Fourier-Motzkin elimination. The result
/// describes exactly the shadow of the polytope on the remaining coordinates.
inline SliceSystem eliminate_last(const SliceSystem& s) {
    const std::size_t t = s.vars - 1;
    SliceSystem out;
    out.vars = t;
    out.infeasible = s.infeasible;

    std::vector<std::size_t> pos, neg;
    std::map<std::vector<BigInt>, Rational> tightest;
    for (std::size_t i = 0; i < s.normals.size(); ++i) {
        const BigInt& c = s.normals[i][t];
        if (c > 0) {
            pos.push_back(i);
        } else if (c < 0) {
            neg.push_back(i);
        } else {
            std::vector<BigInt> trimmed(s.normals[i].begin(), s.normals[i].begin() + t);
            out.add_row(std::move(trimmed), s.offsets[i], tightest);
        }
    }
    if (pos.empty() || neg.empty())
        throw InputError("unbounded direction detected while counting lattice points");

    for (const auto ip : pos) {
        for (const auto in : neg) {
            const BigInt p = s.normals[ip][t];
            const BigInt q = -s.normals[in][t];
            std::vector<BigInt> combined(t);
            for (std::size_t j = 0; j < t; ++j)
                combined[j] = q * s.normals[ip][j] + p * s.normals[in][j];
            out.add_row(std::move(combined), Rational(q) * s.offsets[ip] + Rational(p) * s.offsets[in],
                        tightest);
        }
    }
    out.finish(tightest);
    return out;
}

}  // namespace detail

/// Exact number of lattice points of the k-th dilate of q, by recursive
/// coordinate slicing: project down to one coordinate, walk its exact integer
/// range, substitute, and recurse on the induced system. The projections are
/// computed once per level.
inline std::uint64_t count_lattice_points(const DualPolytope& q, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("count_lattice_points: k must be >= 1");
    const std::size_t n = static_cast<std::size_t>(q.dim);

    std::vector<detail::SliceSystem> levels(n + 1);
    {
        detail::SliceSystem full;
        full.vars = n;
        std::map<std::vector<BigInt>, Rational> tightest;
        for (std::size_t i = 0; i < q.normals.size(); ++i) {
            std::vector<BigInt> row(q.normals[i].begin(), q.normals[i].end());
            full.add_row(std::move(row), Rational(q.offsets[i] * k), tightest);
        }
        full.finish(tightest);
        levels[n] = std::move(full);
    }
    for (std::size_t j = n; j >= 1; --j) {
        if (levels[j].infeasible) return 0;
        if (j > 1) levels[j - 1] = detail::eliminate_last(levels[j]);
        // Bounded above and below in the j-th coordinate?
        bool has_lower = false, has_upper = false;
        for (const auto& normal : levels[j].normals) {
            if (normal[j - 1] > 0) has_lower = true;
            if (normal[j - 1] < 0) has_upper = true;
        }
        if (!has_lower || !has_upper)
            throw InputError("unbounded direction detected while counting lattice points");
    }

    std::vector<BigInt> prefix(n);
    const auto count_level = [&](const auto& self, std::size_t j) -> std::uint64_t {
        const auto& sys = levels[j];
        bool have_lo = false, have_hi = false;
        Rational lo, hi;
        for (std::size_t i = 0; i < sys.normals.size(); ++i) {
            const BigInt& c = sys.normals[i][j - 1];
            if (c == 0) continue;
            BigInt partial = 0;
            for (std::size_t t = 0; t + 1 < j; ++t)
                partial += sys.normals[i][t] * prefix[t];
            const Rational bound = (sys.offsets[i] - Rational(partial)) / Rational(c);
            if (c > 0) {
                if (!have_lo || bound > lo) lo = bound;
                have_lo = true;
            } else {
                if (!have_hi || bound < hi) hi = bound;
                have_hi = true;
            }
        }
        const BigInt first = lo.ceil();
        const BigInt last = hi.floor();
        if (first > last) return 0;
        if (j == n) {
            return static_cast<std::uint64_t>(BigInt(last - first + 1));
        }
        std::uint64_t total = 0;
        for (BigInt x = first; x <= last; ++x) {
            prefix[j - 1] = x;
            total += self(self, j + 1);
        }
        return total;
    };
    return count_level(count_level, 1);
}

}  // namespace chow
