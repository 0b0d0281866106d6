#pragma once

#include <random>

#include "kronperm/permutation.hpp"
#include "kronperm/types.hpp"

namespace kronperm {

/// Deterministic random source: std::mt19937_64 (fully specified by the
/// standard) with plain modulo mapping, so the same seed gives the same
/// stream on every platform. Standard-library distributions are avoided on
/// purpose, they are not portable across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  Index uniformIndex(Index n) { return static_cast<Index>(next() % static_cast<std::uint64_t>(n)); }

  long long uniformInt(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Matrix with integer-valued double entries drawn from [lo, hi].
  Matrixd integerMatrix(Index rows, Index cols, long long lo = -9, long long hi = 9) {
    Matrixd m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<double>(uniformInt(lo, hi));
    }
    return m;
  }

  Vectord integerVector(Index n, long long lo = -9, long long hi = 9) {
    Vectord v(n);
    for (Index i = 0; i < n; ++i) v(i) = static_cast<double>(uniformInt(lo, hi));
    return v;
  }

  /// Fisher-Yates shuffle of the identity.
  Permutation permutation(Index k) {
    std::vector<Index> images(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i;
    for (Index i = k - 1; i > 0; --i) {
      const Index j = uniformIndex(i + 1);
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(images));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kronperm
