#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monoglue/errors.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/rational.hpp"

namespace monoglue {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The pivot in
/// each step is the first nonzero entry scanning down the current column, so
/// the output is a deterministic function of the input.
inline RrefResult rref(Matrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(sel, j));
        Rational inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = inv * a(row, j);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivot_cols.size(); }

/// Basis of the null space {x : a x = 0} as columns of an n x k matrix, read
/// off the free columns of the reduced row echelon form.
inline Matrix kernel_basis(const Matrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(a.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t f = free_cols[t];
        k(f, t) = Rational(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            k(r.pivot_cols[i], t) = -r.reduced(i, f);
    }
    return k;
}

/// Basis of the column space: the pivot columns of a, kept in original order.
inline Matrix image_basis(const Matrix& a) {
    return a.select_columns(rref(a).pivot_cols);
}

inline Matrix invert(const Matrix& a) {
    if (!a.is_square()) throw error(errc::not_square, "invert on " + a.shape_str());
    std::size_t n = a.rows();
    RrefResult r = rref(Matrix::hstack(a, Matrix::identity(n)));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i)
            throw error(errc::singular, "invert on singular " + a.shape_str());
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return r.reduced.select_columns(right);
}

inline bool is_invertible(const Matrix& a) {
    return a.is_square() && rank(a) == a.rows();
}

inline Rational det(const Matrix& a) {
    if (!a.is_square()) throw error(errc::not_square, "det on " + a.shape_str());
    Matrix m = a;
    std::size_t n = m.rows();
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(sel, j));
            d = -d;
        }
        d = d * m(col, col);
        Rational inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Rational f = inv * m(i, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return d;
}

/// One solution x of a x = b for each column of b, or nullopt when some
/// column lies outside the image. Free variables are set to zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw error(errc::shape_mismatch, "solve " + a.shape_str() + " against " + b.shape_str());
    RrefResult r = rref(Matrix::hstack(a, b));
    for (std::size_t p : r.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(r.pivot_cols[i], j) = r.reduced(i, a.cols() + j);
    return x;
}

/// Canonical basis for the span of the columns of u: the nonzero rows of the
/// reduced row echelon form of the transpose, returned as columns. Equal
/// subspaces yield entry-identical bases.
inline Matrix canonical_subspace(const Matrix& u) {
    RrefResult r = rref(u.transpose());
    Matrix basis(u.rows(), r.pivot_cols.size());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < u.rows(); ++j) basis(j, i) = r.reduced(i, j);
    return basis;
}

/// span(cols u) contained in span(cols v).
inline bool subspace_leq(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows())
        throw error(errc::shape_mismatch, "subspaces in different ambient spaces");
    return rank(Matrix::hstack(v, u)) == rank(v);
}

inline bool subspace_eq(const Matrix& u, const Matrix& v) {
    return subspace_leq(u, v) && subspace_leq(v, u);
}

inline Matrix subspace_sum(const Matrix& u, const Matrix& v) {
    return canonical_subspace(Matrix::hstack(u, v));
}

inline Matrix subspace_intersection(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows())
        throw error(errc::shape_mismatch, "subspaces in different ambient spaces");
    Matrix k = kernel_basis(Matrix::hstack(u, -v));
    Matrix top(u.cols(), k.cols());
    for (std::size_t i = 0; i < u.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
    return canonical_subspace(u * top);
}

/// Annihilator of span(cols u) inside the dual space, identified with column
/// vectors via the standard pairing: {f : f^T u = 0}.
inline Matrix annihilator(const Matrix& u) {
    return canonical_subspace(kernel_basis(u.transpose()));
}

} // namespace monoglue
