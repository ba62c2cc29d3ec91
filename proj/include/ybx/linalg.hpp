#pragma once

#include "ybx/gauss.hpp"

#include <cstddef>
#include <vector>

namespace ybx {

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
Matrix<S> zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix<S>(rows, std::vector<S>(cols, S{}));
}

template <class S>
Matrix<S> identity_matrix(std::size_t n) {
    auto m = zero_matrix<S>(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m[k][k] = S(GaussRat(1));
    return m;
}

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    auto out = zero_matrix<S>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k]))
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

template <class S>
Matrix<S> mat_transpose(const Matrix<S>& a) {
    auto out = zero_matrix<S>(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            out[j][i] = a[i][j];
    return out;
}

template <class S>
bool mat_equal(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size())
            return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j]))
                return false;
    }
    return true;
}

/// Determinant by cofactor expansion; needs ring operations only, so it
/// works for polynomial entries as well.
template <class S>
S mat_det(const Matrix<S>& a) {
    std::size_t n = a.size();
    if (n == 0)
        return S(GaussRat(1));
    if (n == 1)
        return a[0][0];
    S det{};
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a[0][j]))
            continue;
        Matrix<S> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<S> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        S term = a[0][j] * mat_det(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

/// Reduced row echelon form over the field Q(i), in place; returns pivot
/// column indices.
inline std::vector<std::size_t> rref(Matrix<GaussRat>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        GaussRat inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            GaussRat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t mat_rank(Matrix<GaussRat> m) { return rref(m).size(); }

inline Matrix<GaussRat> mat_inverse(const Matrix<GaussRat>& a) {
    std::size_t n = a.size();
    auto aug = zero_matrix<GaussRat>(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = GaussRat(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw Error("matrix is singular");
    auto out = zero_matrix<GaussRat>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = aug[i][n + j];
    return out;
}

/// Basis of the right kernel {x : a x = 0}.
inline std::vector<std::vector<GaussRat>> mat_kernel(Matrix<GaussRat> a) {
    if (a.empty())
        return {};
    std::size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<GaussRat> v(cols, GaussRat(0));
        v[free] = GaussRat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ybx
