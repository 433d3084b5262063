#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <span>
#include <vector>

#include "symvol/algebra/rational.hpp"

namespace symvol {

/// (genus, degrees sorted descending) identifying <tau_{d_1} ... tau_{d_n}>_g.
struct IntersectionKey {
  int genus = 0;
  std::vector<int> degrees;

  friend auto operator<=>(const IntersectionKey&, const IntersectionKey&) = default;
};

/// Memoized psi-class intersection numbers computed by the DVV recursion.
///
/// Lookups are safe from many threads. A missing value is computed without
/// holding the lock and inserted if still absent; stored values never change.
class IntersectionTable {
 public:
  /// <tau_{d_1} ... tau_{d_n}>_g. Zero for unstable (g, n), for a dimension
  /// mismatch sum d_i != 3g - 3 + n, for n == 0, and whenever some d_i < 0.
  Rational get(int genus, std::span<const int> degrees);

  std::size_t size() const;

 private:
  Rational compute(int genus, const std::vector<int>& sorted);

  mutable std::shared_mutex mutex_;
  std::map<IntersectionKey, Rational> memo_;
};

/// Process-wide table used by the free functions below.
IntersectionTable& default_intersection_table();

Rational intersection(int genus, std::span<const int> degrees);

inline Rational intersection(int genus, std::initializer_list<int> degrees) {
  return intersection(genus, std::span<const int>(degrees.begin(), degrees.size()));
}

}  // namespace symvol
