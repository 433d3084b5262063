#include "symvol/intersections.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "symvol/algebra/combinatorics.hpp"

namespace symvol {

namespace {

Rational dfact(int m) { return Rational(double_factorial_odd(m)); }

}  // namespace

Rational IntersectionTable::get(int genus, std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n == 0 || genus < 0 || 2 * genus - 2 + n <= 0) return {};
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; })) return {};
  const long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (sum != 3L * genus - 3 + n) return {};

  IntersectionKey key{genus, {degrees.begin(), degrees.end()}};
  std::sort(key.degrees.begin(), key.degrees.end(), std::greater<>());

  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Rational value = compute(genus, key.degrees);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t IntersectionTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Rational IntersectionTable::compute(int genus, const std::vector<int>& sorted) {
  const std::size_t n = sorted.size();
  if (genus == 0 && n == 3) return Rational(1);  // <tau_0^3>_0
  if (genus == 1 && n == 1) return Rational(1) / Rational(24);  // <tau_1>_1

  const int d1 = sorted.front();
  const std::vector<int> rest(sorted.begin() + 1, sorted.end());
  Rational total;

  // j-terms: tau_{d_1} absorbs tau_{d_j}.
  for (std::size_t j = 0; j < rest.size(); ++j) {
    const int dj = rest[j];
    std::vector<int> merged;
    merged.reserve(rest.size());
    merged.push_back(d1 + dj - 1);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i != j) merged.push_back(rest[i]);
    }
    const Rational bracket = get(genus, merged);
    if (bracket.is_zero()) continue;
    total += dfact(2 * d1 + 2 * dj - 1) / (dfact(2 * d1 + 1) * dfact(2 * dj - 1)) * bracket;
  }

  // Quadratic terms: a + b = d_1 - 2.
  const Rational outer = dfact(2 * d1 + 1);
  const std::size_t m = rest.size();
  for (int a = 0; a <= d1 - 2; ++a) {
    const int b = d1 - 2 - a;
    const Rational weight = Rational(1, 2) * dfact(2 * a + 1) * dfact(2 * b + 1) / outer;

    Rational inner;
    if (genus >= 1) {
      std::vector<int> lowered{a, b};
      lowered.insert(lowered.end(), rest.begin(), rest.end());
      inner += get(genus - 1, lowered);
    }
    // Ordered splittings over subsets I of the remaining points; unstable
    // factors vanish through get().
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      std::vector<int> left{a};
      std::vector<int> right{b};
      for (std::size_t i = 0; i < m; ++i) {
        ((mask >> i) & 1UL ? left : right).push_back(rest[i]);
      }
      for (int g1 = 0; g1 <= genus; ++g1) {
        const Rational x = get(g1, left);
        if (x.is_zero()) continue;
        const Rational y = get(genus - g1, right);
        if (!y.is_zero()) inner += x * y;
      }
    }
    if (!inner.is_zero()) total += weight * inner;
  }
  return total;
}

IntersectionTable& default_intersection_table() {
  static IntersectionTable table;
  return table;
}

Rational intersection(int genus, std::span<const int> degrees) {
  return default_intersection_table().get(genus, degrees);
}

}  // namespace symvol
