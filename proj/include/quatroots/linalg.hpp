#ifndef QUATROOTS_LINALG_HPP
#define QUATROOTS_LINALG_HPP

#include <array>
#include <optional>
#include <vector>

#include "quatroots/rational.hpp"

namespace quatroots {

/// 4x4 matrix over the center, row-major. Column n holds the coordinates of
/// the n-th basis image when the matrix represents an F-linear map on the
/// algebra.
template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
using Vec4 = std::array<T, 4>;

namespace detail {

/// In-place reduced row echelon form by exact Gaussian elimination; returns
/// the pivot column of each nonzero row.
template <class T>
std::vector<std::size_t> rref(Mat4<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < 4 && row < 4; ++col) {
        std::size_t sel = row;
        while (sel < 4 && is_zero(m[sel][col])) ++sel;
        if (sel == 4) continue;
        std::swap(m[row], m[sel]);
        const T piv = m[row][col];
        for (T& v : m[row]) v /= piv;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            const T f = m[r][col];
            for (std::size_t c = 0; c < 4; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Mat4<T> m) {
    return detail::rref(m).size();
}

/// Basis of { v : m v = 0 }.
template <class T>
std::vector<Vec4<T>> nullspace(Mat4<T> m) {
    const auto pivots = detail::rref(m);
    std::array<bool, 4> is_pivot{};
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec4<T>> basis;
    for (std::size_t free = 0; free < 4; ++free) {
        if (is_pivot[free]) continue;
        Vec4<T> v{T(0), T(0), T(0), T(0)};
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(v);
    }
    return basis;
}

/// Unique solution of m v = rhs, nullopt when m is singular.
template <class T>
std::optional<Vec4<T>> solve(const Mat4<T>& m, const Vec4<T>& rhs) {
    // Augment by running elimination on [m | rhs] column-wise.
    std::array<std::array<T, 5>, 4> a;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) a[r][c] = m[r][c];
        a[r][4] = rhs[r];
    }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t sel = col;
        while (sel < 4 && is_zero(a[sel][col])) ++sel;
        if (sel == 4) return std::nullopt;
        std::swap(a[col], a[sel]);
        const T piv = a[col][col];
        for (T& v : a[col]) v /= piv;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            const T f = a[r][col];
            for (std::size_t c = 0; c < 5; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return Vec4<T>{a[0][4], a[1][4], a[2][4], a[3][4]};
}

}  // namespace quatroots

#endif  // QUATROOTS_LINALG_HPP
