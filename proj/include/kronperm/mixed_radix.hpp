#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kronperm/types.hpp"

namespace kronperm {

/// Mixed-radix positional system over extents (n_1, ..., n_k), leftmost digit
/// most significant. Flat indices enumerate multi-indices lexicographically,
/// which is exactly the order in which a Kronecker product enumerates basis
/// products of its factors.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<Index> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
      throw DimensionError("mixed radix needs at least one extent");
    }
    for (Index d : dims_) {
      if (d < 1) {
        throw DimensionError("mixed radix extent " + std::to_string(d) + " is not positive");
      }
      total_ = checkedMulIndex(total_, d);
    }
  }

  Index rank() const { return static_cast<Index>(dims_.size()); }
  Index dim(Index axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::vector<Index>& dims() const { return dims_; }
  Index total() const { return total_; }

  Index linearize(std::span<const Index> idx) const {
    if (static_cast<Index>(idx.size()) != rank()) {
      throw DimensionError("multi-index has " + std::to_string(idx.size()) +
                           " components, expected " + std::to_string(rank()));
    }
    Index flat = 0;
    for (Index axis = 0; axis < rank(); ++axis) {
      const Index component = idx[static_cast<std::size_t>(axis)];
      if (component < 0 || component >= dim(axis)) {
        throw DimensionError("component " + std::to_string(component) + " of axis " +
                             std::to_string(axis) + " is outside [0, " +
                             std::to_string(dim(axis)) + ")");
      }
      flat = flat * dim(axis) + component;
    }
    return flat;
  }

  void delinearizeInto(Index flat, std::span<Index> out) const {
    if (flat < 0 || flat >= total_) {
      throw DimensionError("flat index " + std::to_string(flat) + " is outside [0, " +
                           std::to_string(total_) + ")");
    }
    for (Index axis = rank() - 1; axis >= 0; --axis) {
      out[static_cast<std::size_t>(axis)] = flat % dim(axis);
      flat /= dim(axis);
    }
  }

  std::vector<Index> delinearize(Index flat) const {
    std::vector<Index> idx(static_cast<std::size_t>(rank()));
    delinearizeInto(flat, idx);
    return idx;
  }

  bool operator==(const MixedRadix&) const = default;

 private:
  std::vector<Index> dims_;
  Index total_ = 1;
};

}  // namespace kronperm
