#pragma once

#include <map>
#include <shared_mutex>
#include <utility>

#include "symvol/algebra/correlator.hpp"
#include "symvol/volumes.hpp"

namespace symvol {

/// W_{g,n} as the Laplace transform of L_1 ... L_n Vol_{g,n}. Stable keys only.
Correlator correlator_laplace(int genus, int n, VolumeTable& volumes = default_volume_table());

/// Image of zeta^{-2d-2} under the unstable Airy-curve term, expressed in
/// (z_1, z_j): sum over r + s = d + 1 of (2s + 1) z_1^{-2r-2} z_j^{-2s-2}.
/// Arity 2, slot 0 = z_1, slot 1 = z_j.
Correlator j_term_operator(unsigned d);

/// (1 / 2 z_1^2) W(z_1, z_1, z_3, ...): merges slots 0 and 1 onto z_1.
/// Throws std::invalid_argument for arity < 2.
Correlator diagonal_stable_term(const Correlator& w);

/// Eynard-Orantin invariants of the Airy curve x = z^2 / 2, y = z, computed by
/// the residue recursion entirely within Laurent polynomials in z_i^{-2}.
class AiryRecursion {
 public:
  /// W_{g,n}; throws std::invalid_argument for unstable keys.
  Correlator correlator(int genus, int n);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Correlator> memo_;
};

AiryRecursion& default_airy_recursion();

Correlator correlator_eo(int genus, int n);

}  // namespace symvol
