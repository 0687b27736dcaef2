#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "holant/algebra.hpp"
#include "holant/errors.hpp"

// Exact dense linear algebra over any field scalar with ==, +, -, *, /.
// Nothing here pivots on magnitude; the first nonzero entry is used.

namespace holant {

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Reduced row echelon form, in place. Returns the pivot column of each nonzero row.
template <typename S>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<S>& a) {
  const S zero(0);
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == zero) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == zero) continue;
      const S factor = a(r, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(r, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
  DenseMatrix<S> a = m;
  const Eigen::Index n = a.rows();
  S result(1);
  const S zero(0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && a(p, col) == zero) ++p;
    if (p == n) return zero;
    if (p != col) {
      a.row(p).swap(a.row(col));
      result = -result;
    }
    result *= a(col, col);
    const S inv = S(1) / a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == zero) continue;
      const S factor = a(r, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return result;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> a = m;
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

// Basis of the right null space {v : m v = 0}.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  DenseMatrix<S> a = m;
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<DenseVector<S>> basis;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    DenseVector<S> v = DenseVector<S>::Constant(a.cols(), S(0));
    v(free) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename DerivedA, typename DerivedB>
DenseVector<typename DerivedA::Scalar> linear_solve(const Eigen::MatrixBase<DerivedA>& a,
                                                    const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedA::Scalar;
  if (a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != 1)
    throw DomainError("linear_solve: dimension mismatch");
  const Eigen::Index n = a.rows();
  DenseMatrix<S> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw DomainError("linear_solve: singular system");
  return aug.col(n);
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DomainError("inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  DenseMatrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = DenseMatrix<S>::Identity(n, n);
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw DomainError("inverse: singular matrix");
  return aug.rightCols(n);
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> mat_pow(const Eigen::MatrixBase<Derived>& m, long k) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DomainError("mat_pow: matrix is not square");
  if (k < 0) return mat_pow(inverse(m), -k);
  DenseMatrix<S> result = DenseMatrix<S>::Identity(m.rows(), m.cols());
  DenseMatrix<S> base = m;
  while (k > 0) {
    if (k & 1) result = (result * base).eval();
    k >>= 1;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

// c with u == c * v, when one exists and is nonzero. Zero vectors only match zero vectors.
template <typename DerivedU, typename DerivedV>
std::optional<typename DerivedU::Scalar> projective_factor(const Eigen::MatrixBase<DerivedU>& u,
                                                           const Eigen::MatrixBase<DerivedV>& v) {
  using S = typename DerivedU::Scalar;
  if (u.size() != v.size()) throw DomainError("projective comparison of different dimensions");
  const S zero(0);
  std::optional<S> c;
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    const S& a = u(j);
    const S& b = v(j);
    if (b == zero) {
      if (a != zero) return std::nullopt;
      continue;
    }
    if (!c) {
      if (a == zero) return std::nullopt;
      c = a / b;
    } else if (a != *c * b) {
      return std::nullopt;
    }
  }
  if (!c) return S(1);
  return c;
}

template <typename DerivedU, typename DerivedV>
bool projective_equal(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  return projective_factor(u, v).has_value();
}

template <typename Derived>
std::optional<typename Derived::Scalar> scalar_identity_factor(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const S zero(0);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r == c) {
        if (m(r, c) != m(0, 0)) return std::nullopt;
      } else if (m(r, c) != zero) {
        return std::nullopt;
      }
    }
  return m(0, 0);
}

}  // namespace holant
