#pragma once

#include <span>
#include <string>
#include <vector>

#include "kronperm/types.hpp"

namespace kronperm {

/// Kronecker product: the block matrix whose (i, j) block is a(i, j) * b.
/// For a (m x n) and b (p x r) the result is (m*p) x (n*r) with
/// result(i*p + s, j*r + t) = a(i, j) * b(s, t).
template <typename DA, typename DB>
DenseMatrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a,
                                      const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "kron factors must share a scalar type");
  using Scalar = typename DA::Scalar;
  const Index rows = checkedMulIndex(a.rows(), b.rows());
  const Index cols = checkedMulIndex(a.cols(), b.cols());
  checkedMulIndex(rows, cols);
  DenseMatrix<Scalar> out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
    }
  }
  return out;
}

/// Left fold of kron over a nonempty factor list. The fold order does not
/// matter for exactly representable entries, since the product is associative.
template <typename Scalar>
DenseMatrix<Scalar> kronMany(std::span<const DenseMatrix<Scalar>> ms) {
  if (ms.empty()) {
    throw DimensionError("kronMany needs at least one factor");
  }
  DenseMatrix<Scalar> out = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) out = kron(out, ms[i]);
  return out;
}

template <typename Scalar>
DenseMatrix<Scalar> kronMany(const std::vector<DenseMatrix<Scalar>>& ms) {
  return kronMany(std::span<const DenseMatrix<Scalar>>(ms));
}

/// Row-major vectorization: reads x row by row into a single column of
/// length rows*cols.
template <typename D>
ColVector<typename D::Scalar> vecRow(const Eigen::MatrixBase<D>& x) {
  return x.derived().template reshaped<Eigen::RowMajor>(x.size(), 1);
}

/// Inverse of vecRow: lays a column of length rows*cols back out row by row.
template <typename D>
DenseMatrix<typename D::Scalar> unvecRow(const Eigen::MatrixBase<D>& v, Index rows, Index cols) {
  if (v.cols() != 1) {
    throw DimensionError("unvecRow expects a column vector");
  }
  if (v.rows() != checkedMulIndex(rows, cols)) {
    throw DimensionError("cannot reshape a vector of length " + std::to_string(v.rows()) +
                         " into " + std::to_string(rows) + " x " + std::to_string(cols));
  }
  return v.derived().template reshaped<Eigen::RowMajor>(rows, cols);
}

}  // namespace kronperm
