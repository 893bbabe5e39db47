#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace detail {

/// Clears denominators row by row. Returns the integer matrix and the product
/// of the row scale factors (scaling a row of an augmented system leaves its
/// solution set unchanged; determinants divide by the product).
inline std::pair<std::vector<std::vector<BigInt>>, BigInt> clear_denominators(
    const QMatrix& m) {
    std::vector<std::vector<BigInt>> w(m.rows(), std::vector<BigInt>(m.cols()));
    BigInt scale_product = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row_lcm = boost::multiprecision::lcm(row_lcm, m(i, j).denominator());
        for (std::size_t j = 0; j < m.cols(); ++j)
            w[i][j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
        scale_product *= row_lcm;
    }
    return {std::move(w), std::move(scale_product)};
}

/// Fraction-free (Bareiss) forward elimination on an integer matrix with
/// `pivots` pivot columns. Divisions are exact by construction, which keeps
/// intermediate entries at determinant size instead of exploding.
/// Returns the sign from row swaps, or 0 if some pivot column is dead.
inline int bareiss_forward(std::vector<std::vector<BigInt>>& w, std::size_t pivots) {
    const std::size_t rows = w.size();
    const std::size_t cols = rows == 0 ? 0 : w[0].size();
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 <= pivots && k + 1 < rows + 1; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < rows && w[pivot_row][k] == 0) ++pivot_row;
        if (pivot_row == rows) return 0;
        if (pivot_row != k) {
            std::swap(w[pivot_row], w[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return sign;
}

}  // namespace detail

/// Exact determinant via fraction-free elimination.
inline Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    auto [w, scale] = detail::clear_denominators(m);
    const int sign = detail::bareiss_forward(w, n - 1);
    if (sign == 0) return Rational(0);
    return Rational(sign * w[n - 1][n - 1], scale);
}

/// Solves A X = B exactly for all columns of B at once.
/// Throws ConsistencyError if A is singular.
inline QMatrix solve_many(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix is not square");
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: rhs shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();

    QMatrix aug(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
    }
    auto [w, scale] = detail::clear_denominators(aug);
    (void)scale;
    if (detail::bareiss_forward(w, n) == 0 || (n > 0 && w[n - 1][n - 1] == 0))
        throw ConsistencyError("solve: singular matrix");

    QMatrix x(n, m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc{BigInt(w[ii][n + c])};
            for (std::size_t j = ii + 1; j < n; ++j)
                acc -= Rational(w[ii][j]) * x(j, c);
            x(ii, c) = acc / Rational(w[ii][ii]);
        }
    }
    return x;
}

inline std::vector<Rational> solve(const QMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    QMatrix col(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i];
    const QMatrix x = solve_many(a, col);
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x(i, 0);
    return out;
}

inline QMatrix inverse(const QMatrix& a) {
    return solve_many(a, QMatrix::identity(a.rows()));
}

namespace detail {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv_pivot = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace detail

inline std::size_t rank(QMatrix m) { return detail::rref(m).size(); }

/// Basis of the right nullspace {x : M x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(QMatrix m) {
    const auto pivot_cols = detail::rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols());
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace chow
