#pragma once

#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kronperm/types.hpp"

namespace kronperm {

/// A bijection of {0, ..., k-1}, stored as its image list. Command-line and
/// text surfaces speak 1-based image lists; everything in memory is 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<Index> images) : images_(std::move(images)) {
    const Index k = size();
    if (k < 1) {
      throw DimensionError("permutation needs at least one element");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (Index image : images_) {
      if (image < 0 || image >= k) {
        throw DimensionError("permutation image " + std::to_string(image) +
                             " is outside [0, " + std::to_string(k) + ")");
      }
      if (seen[static_cast<std::size_t>(image)]) {
        throw DimensionError("permutation repeats image " + std::to_string(image));
      }
      seen[static_cast<std::size_t>(image)] = true;
    }
  }

  static Permutation identity(Index k) {
    std::vector<Index> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), Index(0));
    return Permutation(std::move(images));
  }

  static Permutation fromOneBased(std::span<const Index> images) {
    std::vector<Index> zeroBased(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) zeroBased[i] = images[i] - 1;
    return Permutation(std::move(zeroBased));
  }

  Index size() const { return static_cast<Index>(images_.size()); }
  Index operator()(Index i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& images() const { return images_; }

  std::vector<Index> toOneBased() const {
    std::vector<Index> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  Permutation inverse() const {
    std::vector<Index> inv(images_.size());
    for (Index i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(inv));
  }

  /// (a.then(b))(i) = b(a(i)).
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) {
      throw DimensionError("cannot chain permutations of sizes " + std::to_string(size()) +
                           " and " + std::to_string(next.size()));
    }
    std::vector<Index> images(images_.size());
    for (Index i = 0; i < size(); ++i) images[static_cast<std::size_t>(i)] = next((*this)(i));
    return Permutation(std::move(images));
  }

  bool isIdentity() const {
    for (Index i = 0; i < size(); ++i) {
      if ((*this)(i) != i) return false;
    }
    return true;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Index> images_;
};

}  // namespace kronperm
