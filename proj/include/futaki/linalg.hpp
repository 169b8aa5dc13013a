/**
 * Small exact linear-algebra kernels on Eigen matrices.
 *
 * Pivoting picks the first nonzero entry rather than the largest, which is
 * the right choice for exact scalars. The same code runs on doubles, but no
 * numerical stability is promised there.
 */

#ifndef FUTAKI_LINALG_HPP
#define FUTAKI_LINALG_HPP

#include <optional>

#include "futaki/exactnum.hpp"

namespace futaki {

/// Row-reduces a copy of `m` and returns its rank.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> a = m;
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
        Eigen::Index pivot = rank;
        while (pivot < a.rows() && a(pivot, col) == Scalar(0))
            ++pivot;
        if (pivot == a.rows())
            continue;
        a.row(pivot).swap(a.row(rank));
        for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
            if (a(r, col) == Scalar(0))
                continue;
            const Scalar factor = a(r, col) / a(rank, col);
            a.row(r) -= factor * a.row(rank);
        }
        ++rank;
    }
    return rank;
}

/// Determinant of a square matrix by fraction-exact elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    Matrix<Scalar> a = m;
    Scalar det(1);
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0))
            ++pivot;
        if (pivot == n)
            return Scalar(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) == Scalar(0))
                continue;
            const Scalar factor = a(r, col) / a(col, col);
            a.row(r).tail(n - col) -= factor * a.row(col).tail(n - col);
        }
    }
    return det;
}

/// Unique solution of a square system, or nullopt when singular.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>>
solve_exact(const Eigen::MatrixBase<DerivedA>& lhs, const Eigen::MatrixBase<DerivedB>& rhs)
{
    using Scalar = typename DerivedA::Scalar;
    const Eigen::Index n = lhs.rows();
    if (lhs.cols() != n || rhs.size() != n)
        throw std::invalid_argument("solve_exact expects a square system");
    Matrix<Scalar> a(n, n + 1);
    a.leftCols(n) = lhs;
    a.col(n) = rhs;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0))
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        a.row(pivot).swap(a.row(col));
        a.row(col) /= a(col, col);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Scalar(0))
                continue;
            const Scalar factor = a(r, col);
            a.row(r) -= factor * a.row(col);
        }
    }
    return Vector<Scalar>(a.col(n));
}

/// Sum of all 2x2 principal minors, i.e. the second elementary symmetric
/// function of the eigenvalues.
template <typename Derived>
typename Derived::Scalar principal_minor_sum(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    Scalar sum(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            sum += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    return sum;
}

} // namespace futaki

#endif
