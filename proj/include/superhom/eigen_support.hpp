#pragma once

#include <Eigen/Core>

#include "superhom/gaussian_rational.hpp"
#include "superhom/poly.hpp"

// NumTraits so Eigen dense containers can carry the exact scalar tower.
// Only ring operations are used on these matrices (sum, product, transpose,
// block access); no decompositions, which would want abs()/sqrt().
namespace Eigen {

template <>
struct NumTraits<superhom::GaussianRational> {
    using Self = superhom::GaussianRational;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 20,
        MulCost = 40,
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<superhom::Poly> {
    using Self = superhom::Poly;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 60,
        MulCost = 200,
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace superhom {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Col = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatG = Mat<GaussianRational>;
using ColG = Col<GaussianRational>;
using MatP = Mat<Poly>;
using ColP = Col<Poly>;

template <typename S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

template <typename S>
bool mat_is_zero(const Mat<S>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero())
                return false;
    return true;
}

inline MatG identity_matrix(int n) {
    MatG m = MatG::Constant(n, n, GaussianRational(0));
    for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

/// Exact determinant by Gaussian elimination with nonzero pivoting.
inline GaussianRational determinant(MatG a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n)
        throw Error("determinant of a non-square matrix");
    GaussianRational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return GaussianRational(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        GaussianRational inv = a(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            GaussianRational f = a(r, col) * inv;
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

/// Exact inverse by Gauss-Jordan; throws on singular input.
inline MatG inverse(const MatG& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n)
        throw Error("inverse of a non-square matrix");
    MatG a = m;
    MatG inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw Error("matrix is singular");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        GaussianRational p = a(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a(col, c) *= p;
            inv(col, c) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero())
                continue;
            GaussianRational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace superhom
