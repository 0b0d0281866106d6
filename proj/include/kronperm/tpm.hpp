#pragma once

#include <cmath>
#include <cstdlib>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kronperm/kron.hpp"
#include "kronperm/mixed_radix.hpp"
#include "kronperm/permutation.hpp"
#include "kronperm/types.hpp"

namespace kronperm {

/// Descriptor of a tensor permutation matrix: the permutation sigma together
/// with the factor dimensions (n_1, ..., n_k) of its domain. The matrix it
/// describes is the N x N 0/1 matrix, N = n_1 * ... * n_k, that sends every
/// basis product e_{i_1} (x) ... (x) e_{i_k} to
/// e_{i_{sigma(1)}} (x) ... (x) e_{i_{sigma(k)}}.
class TpmSpec {
 public:
  TpmSpec(Permutation sigma, MixedRadix dims)
      : sigma_(std::move(sigma)), dims_(std::move(dims)) {
    if (sigma_.size() != dims_.rank()) {
      throw DimensionError("permutation of size " + std::to_string(sigma_.size()) +
                           " does not match " + std::to_string(dims_.rank()) + " extents");
    }
  }

  const Permutation& sigma() const { return sigma_; }
  const MixedRadix& dims() const { return dims_; }
  Index size() const { return dims_.total(); }

  /// Codomain extents (n_{sigma(1)}, ..., n_{sigma(k)}).
  MixedRadix permutedDims() const {
    std::vector<Index> out(static_cast<std::size_t>(dims_.rank()));
    for (Index j = 0; j < dims_.rank(); ++j) {
      out[static_cast<std::size_t>(j)] = dims_.dim(sigma_(j));
    }
    return MixedRadix(std::move(out));
  }

  /// Spec of the transposed (equivalently, inverse) matrix: permutation
  /// sigma^{-1} acting on the codomain extents.
  TpmSpec transposed() const { return TpmSpec(sigma_.inverse(), permutedDims()); }

  bool operator==(const TpmSpec&) const = default;

 private:
  Permutation sigma_;
  MixedRadix dims_;
};

/// The swap descriptor on two factors of dimensions n and p. Its matrix
/// commutes a two-factor Kronecker product.
inline TpmSpec tcm(Index n, Index p) {
  return TpmSpec(Permutation({1, 0}), MixedRadix({n, p}));
}

/// Spec whose matrix is explicit(outer) * explicit(inner). Requires the
/// domain extents of outer to equal the codomain extents of inner.
/// The composite sends digit j to slot inner.sigma(outer.sigma(j)), fixed by
/// chasing a basis product through both maps.
inline TpmSpec compose(const TpmSpec& outer, const TpmSpec& inner) {
  if (outer.dims() != inner.permutedDims()) {
    throw DimensionError("tpm compose: outer domain extents do not chain with inner codomain");
  }
  return TpmSpec(outer.sigma().then(inner.sigma()), inner.dims());
}

/// Compiled form of a tensor permutation matrix: dest[c] is the row r with
/// U e_c = e_r, so applying U is a single O(N) scatter. Immutable once built.
class ImplicitTpm {
 public:
  explicit ImplicitTpm(TpmSpec spec) : spec_(std::move(spec)) {
    const MixedRadix& in = spec_.dims();
    const Permutation& sigma = spec_.sigma();
    const Index k = in.rank();
    const Index n = in.total();
    // Strides of the codomain axes; axis j of the output has extent
    // in.dim(sigma(j)).
    std::vector<Index> outStride(static_cast<std::size_t>(k));
    Index stride = 1;
    for (Index j = k - 1; j >= 0; --j) {
      outStride[static_cast<std::size_t>(j)] = stride;
      stride = checkedMulIndex(stride, in.dim(sigma(j)));
    }
    dest_.resize(static_cast<std::size_t>(n));
    std::vector<Index> digits(static_cast<std::size_t>(k), 0);
    for (Index c = 0; c < n; ++c) {
      Index out = 0;
      for (Index j = 0; j < k; ++j) {
        out += outStride[static_cast<std::size_t>(j)] * digits[static_cast<std::size_t>(sigma(j))];
      }
      dest_[static_cast<std::size_t>(c)] = out;
      for (Index axis = k - 1; axis >= 0; --axis) {  // odometer increment
        if (++digits[static_cast<std::size_t>(axis)] < in.dim(axis)) break;
        digits[static_cast<std::size_t>(axis)] = 0;
      }
    }
  }

  const TpmSpec& spec() const { return spec_; }
  Index size() const { return static_cast<Index>(dest_.size()); }
  std::span<const Index> dest() const { return dest_; }

  /// U * v for a column vector v of length N.
  template <typename D>
  ColVector<typename D::Scalar> apply(const Eigen::MatrixBase<D>& v) const {
    if (v.cols() != 1 || v.rows() != size()) {
      throw DimensionError("vector of length " + std::to_string(v.rows()) +
                           " does not match operator size " + std::to_string(size()));
    }
    ColVector<typename D::Scalar> out(size());
    for (Index c = 0; c < size(); ++c) {
      out(dest_[static_cast<std::size_t>(c)]) = v(c, 0);
    }
    return out;
  }

  /// U * m: row r of m moves to row dest[r].
  template <typename D>
  DenseMatrix<typename D::Scalar> applyLeft(const Eigen::MatrixBase<D>& m) const {
    if (m.rows() != size()) {
      throw DimensionError("matrix with " + std::to_string(m.rows()) +
                           " rows does not match operator size " + std::to_string(size()));
    }
    DenseMatrix<typename D::Scalar> out(m.rows(), m.cols());
    for (Index r = 0; r < size(); ++r) {
      out.row(dest_[static_cast<std::size_t>(r)]) = m.row(r);
    }
    return out;
  }

  /// m * U^T: column c of m moves to column dest[c].
  template <typename D>
  DenseMatrix<typename D::Scalar> applyRightTranspose(const Eigen::MatrixBase<D>& m) const {
    if (m.cols() != size()) {
      throw DimensionError("matrix with " + std::to_string(m.cols()) +
                           " columns does not match operator size " + std::to_string(size()));
    }
    DenseMatrix<typename D::Scalar> out(m.rows(), m.cols());
    for (Index c = 0; c < size(); ++c) {
      out.col(dest_[static_cast<std::size_t>(c)]) = m.col(c);
    }
    return out;
  }

 private:
  TpmSpec spec_;
  std::vector<Index> dest_;
};

/// Explicit coordinate form: N pairs (row, col), each carrying an implicit 1,
/// sorted by row, with exactly one entry per row and per column.
class SparseTpm {
 public:
  SparseTpm(Index n, std::vector<std::pair<Index, Index>> coords)
      : n_(n), coords_(std::move(coords)) {
    if (n_ < 1) {
      throw DimensionError("coordinate matrix size must be positive");
    }
    if (static_cast<Index>(coords_.size()) != n_) {
      throw DimensionError("expected " + std::to_string(n_) + " coordinate pairs, got " +
                           std::to_string(coords_.size()));
    }
    std::vector<bool> colSeen(static_cast<std::size_t>(n_), false);
    for (Index r = 0; r < n_; ++r) {
      const auto& [row, col] = coords_[static_cast<std::size_t>(r)];
      if (row != r) {
        throw DimensionError("coordinate rows must be 0.." + std::to_string(n_ - 1) +
                             " in order, got row " + std::to_string(row) + " at position " +
                             std::to_string(r));
      }
      if (col < 0 || col >= n_ || colSeen[static_cast<std::size_t>(col)]) {
        throw DimensionError("coordinate columns must form a permutation of 0.." +
                             std::to_string(n_ - 1));
      }
      colSeen[static_cast<std::size_t>(col)] = true;
    }
  }

  explicit SparseTpm(const ImplicitTpm& u, Index maxN = kDefaultMaterializeCap)
      : n_(u.size()) {
    if (n_ > maxN) {
      throw DimensionError("explicit matrix of size " + std::to_string(n_) +
                           " exceeds the materialization cap " + std::to_string(maxN));
    }
    std::vector<Index> colOfRow(static_cast<std::size_t>(n_));
    for (Index c = 0; c < n_; ++c) {
      colOfRow[static_cast<std::size_t>(u.dest()[static_cast<std::size_t>(c)])] = c;
    }
    coords_.reserve(static_cast<std::size_t>(n_));
    for (Index r = 0; r < n_; ++r) {
      coords_.emplace_back(r, colOfRow[static_cast<std::size_t>(r)]);
    }
  }

  explicit SparseTpm(const TpmSpec& spec, Index maxN = kDefaultMaterializeCap)
      : SparseTpm(ImplicitTpm(spec), maxN) {}

  Index size() const { return n_; }
  const std::vector<std::pair<Index, Index>>& coords() const { return coords_; }

  template <typename Scalar = double>
  DenseMatrix<Scalar> toDense() const {
    checkedMulIndex(n_, n_);
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n_, n_);
    for (const auto& [row, col] : coords_) out(row, col) = Scalar(1);
    return out;
  }

  /// Coordinate-list multiply: out[row] = v[col] for each stored pair.
  template <typename D>
  ColVector<typename D::Scalar> apply(const Eigen::MatrixBase<D>& v) const {
    if (v.cols() != 1 || v.rows() != n_) {
      throw DimensionError("vector of length " + std::to_string(v.rows()) +
                           " does not match matrix size " + std::to_string(n_));
    }
    ColVector<typename D::Scalar> out(n_);
    for (const auto& [row, col] : coords_) out(row) = v(col, 0);
    return out;
  }

 private:
  Index n_;
  std::vector<std::pair<Index, Index>> coords_;
};

/// True iff candidate maps every basis product e_{i_1} (x) ... (x) e_{i_k}
/// to the permuted basis product described by spec. Checking all N basis
/// columns is exhaustive by linearity.
template <typename D>
bool verifyTpm(const Eigen::MatrixBase<D>& candidate, const TpmSpec& spec) {
  const Index n = spec.size();
  if (candidate.rows() != n || candidate.cols() != n) {
    throw DimensionError("candidate is " + std::to_string(candidate.rows()) + " x " +
                         std::to_string(candidate.cols()) + ", spec describes " +
                         std::to_string(n) + " x " + std::to_string(n));
  }
  using Scalar = typename D::Scalar;
  const ImplicitTpm canonical(spec);
  for (Index c = 0; c < n; ++c) {
    const Index hot = canonical.dest()[static_cast<std::size_t>(c)];
    for (Index r = 0; r < n; ++r) {
      const Scalar want = (r == hot) ? Scalar(1) : Scalar(0);
      if (candidate(r, c) != want) return false;
    }
  }
  return true;
}

inline bool verifyTpm(const SparseTpm& candidate, const TpmSpec& spec) {
  if (candidate.size() != spec.size()) {
    throw DimensionError("candidate size " + std::to_string(candidate.size()) +
                         " does not match spec size " + std::to_string(spec.size()));
  }
  const SparseTpm canonical(ImplicitTpm(spec), spec.size());
  return candidate.coords() == canonical.coords();
}

namespace detail {

template <typename Scalar>
bool closeOrExact(const DenseMatrix<Scalar>& got, const DenseMatrix<Scalar>& want) {
  if constexpr (std::is_integral_v<Scalar>) {
    return exactlyEqual(got, want);
  } else {
    // Rebuilding a k-fold product in permuted order reassociates the scalar
    // multiplications, so floating point entries may differ in the last bits.
    for (Index i = 0; i < got.rows(); ++i) {
      for (Index j = 0; j < got.cols(); ++j) {
        const auto diff = std::abs(got(i, j) - want(i, j));
        if (diff > 1e-12 * (1 + std::abs(want(i, j)))) return false;
      }
    }
    return true;
  }
}

}  // namespace detail

/// Returns A_{sigma(1)} (x) ... (x) A_{sigma(k)}, computed by conjugating the
/// unpermuted product: U * (A_1 (x) ... (x) A_k) * V^T, with U built on the
/// row extents and V on the column extents of the factors. The directly
/// permuted product is computed as well and the two are compared before
/// returning; a mismatch means a bug in this library, never a property of the
/// input.
template <typename Scalar>
DenseMatrix<Scalar> permuteKronProduct(const Permutation& sigma,
                                       const std::vector<DenseMatrix<Scalar>>& ms) {
  const Index k = sigma.size();
  if (static_cast<Index>(ms.size()) != k) {
    throw DimensionError("permutation of size " + std::to_string(k) + " does not match " +
                         std::to_string(ms.size()) + " factors");
  }
  std::vector<Index> rowDims(ms.size()), colDims(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    rowDims[i] = ms[i].rows();
    colDims[i] = ms[i].cols();
  }
  const ImplicitTpm u(TpmSpec(sigma, MixedRadix(rowDims)));
  const ImplicitTpm v(TpmSpec(sigma, MixedRadix(colDims)));
  const DenseMatrix<Scalar> product = kronMany(ms);
  DenseMatrix<Scalar> conjugated = u.applyLeft(v.applyRightTranspose(product));

  std::vector<DenseMatrix<Scalar>> permuted;
  permuted.reserve(ms.size());
  for (Index j = 0; j < k; ++j) permuted.push_back(ms[static_cast<std::size_t>(sigma(j))]);
  const DenseMatrix<Scalar> direct = kronMany(permuted);
  if (!detail::closeOrExact(conjugated, direct)) {
    throw VerificationError("conjugated Kronecker product disagrees with the direct one");
  }
  return conjugated;
}

}  // namespace kronperm
