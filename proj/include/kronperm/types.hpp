#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kronperm {

using Index = Eigen::Index;

// Dense storage is row major so that walking the entries in memory order
// reads the matrix row by row, the same order used by the row-major
// vectorization and the text formats.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using ColVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrixd = DenseMatrix<double>;
using Vectord = ColVector<double>;
using Matrixi = DenseMatrix<std::int64_t>;
using Vectori = ColVector<std::int64_t>;

/// Shape mismatches, invalid extents, index-range overflow, materialization
/// cap violations.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the dense solver when no usable pivot remains. Carries the
/// elimination step (0-based) that was reached.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(Index step, Index size)
      : std::runtime_error("singular system: no usable pivot at elimination step " +
                           std::to_string(step) + " of " + std::to_string(size)),
        step_(step) {}
  Index step() const { return step_; }

 private:
  Index step_;
};

/// Malformed text input (matrix or coordinate files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File open/read/write failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check disagreed. Signals an implementation bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Largest explicit matrix size N that may be materialized by default.
inline constexpr Index kDefaultMaterializeCap = Index(1) << 26;

inline Index checkedMulIndex(Index a, Index b) {
  if (a < 0 || b < 0) {
    throw DimensionError("negative extent in size computation");
  }
  if (a != 0 && b > std::numeric_limits<Index>::max() / a) {
    throw DimensionError("size " + std::to_string(a) + " * " + std::to_string(b) +
                         " overflows the index range");
  }
  return a * b;
}

template <typename DA, typename DB>
bool exactlyEqual(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a.derived().array() == b.derived().array()).all();
}

}  // namespace kronperm
