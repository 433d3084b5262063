#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace symvol::ribbon {

using Cycle = std::vector<std::size_t>;

/// Permutation of {0, ..., size-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t size);

  /// Builds a permutation from disjoint cycles; unspecified points are fixed.
  /// Throws std::invalid_argument on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t size, std::span<const Cycle> cycles);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;

  /// Cycles, each starting at its smallest point, ordered by that point.
  std::vector<Cycle> cycles() const;
  std::size_t cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (a * b)(i) = a(b(i)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace symvol::ribbon
