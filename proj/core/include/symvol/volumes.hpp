#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "symvol/algebra/even_polynomial.hpp"
#include "symvol/intersections.hpp"

namespace symvol {

/// Stable means 2g - 2 + n > 0.
constexpr bool is_stable(int genus, int n) { return genus >= 0 && n >= 0 && 2 * genus - 2 + n > 0; }

/// Degree of Vol_{g,n} in the squared lengths, 3g - 3 + n.
constexpr int volume_degree(int genus, int n) { return 3 * genus - 3 + n; }

/// Initial conditions of the recursion. Overridable so that test harnesses can
/// feed a corrupted base case through the full pipeline.
struct VolumeBaseCases {
  Rational vol_0_3{1};           ///< Vol_{0,3}, a constant
  Rational vol_1_1{Rational(1) / Rational(48)};  ///< coefficient of L^2 in Vol_{1,1}
};

/// Memoized symplectic volumes Vol_{g,n}(L_1, ..., L_n) from the differentiated
/// recursion. Same reader/writer contract as IntersectionTable.
class VolumeTable {
 public:
  VolumeTable() = default;
  explicit VolumeTable(VolumeBaseCases base) : base_(std::move(base)) {}

  /// Vol_{g,n}; the zero polynomial of arity n for unstable (g, n).
  /// Throws std::invalid_argument for n < 1 or g < 0.
  EvenPolynomial volume(int genus, int n);

  /// Right side of the differentiated recursion, which equals
  /// d/dL_1 (L_1 Vol_{g,n}). Defined for stable keys other than the two
  /// base cases. Not memoized.
  EvenPolynomial recursion_right_side(int genus, int n);

  const VolumeBaseCases& base_cases() const { return base_; }

 private:
  VolumeBaseCases base_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, EvenPolynomial> memo_;
};

VolumeTable& default_volume_table();

EvenPolynomial volume(int genus, int n);

/// Combined j-integrals of (x/2) x^{2k}: a polynomial in (L_1, L_j), i.e.
/// arity 2 with slot 0 = L_1 and slot 1 = L_j.
EvenPolynomial unstable_transfer(unsigned k);

/// Double integral of (xy/2) x^{2a} y^{2b} over x + y <= L_1 (arity 1).
EvenPolynomial stable_transfer(unsigned a, unsigned b);

/// Vol_{g,n} assembled from intersection numbers, one per composition of
/// 3g - 3 + n. Requires a stable key.
EvenPolynomial volume_from_intersections(int genus, int n,
                                         IntersectionTable& table = default_intersection_table());

/// Reads intersection numbers off a volume polynomial. Throws
/// std::invalid_argument if p is not homogeneous of degree 3g - 3 + n or has
/// the wrong arity.
std::vector<std::pair<Exponents, Rational>> intersections_from_volume(const EvenPolynomial& p,
                                                                      int genus, int n);

}  // namespace symvol
