#pragma once

#include <optional>
#include <vector>

#include "ncproj/core/errors.hpp"
#include "ncproj/core/field.hpp"

namespace ncproj {

/// Brings A to reduced row echelon form in place; returns the pivot columns.
template <ExactField S>
std::vector<Eigen::Index> row_reduce(DenseMatrix<S>& A) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < A.cols() && row < A.rows(); ++col) {
    Eigen::Index p = row;
    while (p < A.rows() && is_zero(A(p, col))) ++p;
    if (p == A.rows()) continue;
    if (p != row) A.row(p).swap(A.row(row));
    const S inv = inverse(A(row, col));
    for (Eigen::Index j = col; j < A.cols(); ++j) A(row, j) = A(row, j) * inv;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i == row || is_zero(A(i, col))) continue;
      const S f = A(i, col);
      for (Eigen::Index j = col; j < A.cols(); ++j) {
        if (!is_zero(A(row, j))) A(i, j) = A(i, j) - f * A(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ExactField S>
Eigen::Index rank(DenseMatrix<S> A) {
  return static_cast<Eigen::Index>(row_reduce(A).size());
}

/// Basis of the right null space {v : A v = 0}, one vector per column.
template <ExactField S>
DenseMatrix<S> kernel(DenseMatrix<S> A) {
  const auto pivots = row_reduce(A);
  std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols()), false);
  for (auto c : pivots) is_pivot[c] = true;
  DenseMatrix<S> K(A.cols(), A.cols() - static_cast<Eigen::Index>(pivots.size()));
  K.setConstant(S(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    K(free, k) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) K(pivots[r], k) = -A(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return K;
}

/// Some solution of A x = b, or nullopt when the system is inconsistent.
template <ExactField S>
std::optional<DenseVector<S>> solve(const DenseMatrix<S>& A, const DenseVector<S>& b) {
  DenseMatrix<S> aug(A.rows(), A.cols() + 1);
  aug << A, b;
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  DenseVector<S> x(A.cols());
  x.setConstant(S(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), A.cols());
  return x;
}

template <ExactField S>
S determinant(DenseMatrix<S> A) {
  if (A.rows() != A.cols()) throw DomainError("determinant of a non-square matrix");
  S det(1);
  const Eigen::Index n = A.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && is_zero(A(p, col))) ++p;
    if (p == n) return S(0);
    if (p != col) {
      A.row(p).swap(A.row(col));
      det = -det;
    }
    det = det * A(col, col);
    const S inv = inverse(A(col, col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (is_zero(A(i, col))) continue;
      const S f = A(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) A(i, j) = A(i, j) - f * A(col, j);
    }
  }
  return det;
}

template <ExactField S>
std::optional<DenseMatrix<S>> inverse_matrix(const DenseMatrix<S>& A) {
  const Eigen::Index n = A.rows();
  DenseMatrix<S> aug(n, 2 * n);
  DenseMatrix<S> id = DenseMatrix<S>::Identity(n, n);
  aug << A, id;
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return DenseMatrix<S>(aug.rightCols(n));
}

/// Exact product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <ExactField S>
DenseMatrix<S> multiply(const DenseMatrix<S>& A, const DenseMatrix<S>& B) {
  if (A.cols() != B.rows()) throw DomainError("matrix dimension mismatch");
  DenseMatrix<S> C(A.rows(), B.cols());
  C.setConstant(S(0));
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
      if (is_zero(A(i, k))) continue;
      for (Eigen::Index j = 0; j < B.cols(); ++j) {
        if (!is_zero(B(k, j))) C(i, j) = C(i, j) + A(i, k) * B(k, j);
      }
    }
  }
  return C;
}

}  // namespace ncproj
