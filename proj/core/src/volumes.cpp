#include "symvol/volumes.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

#include "symvol/algebra/combinatorics.hpp"

namespace symvol {

namespace {

Rational fact(unsigned k) { return Rational(factorial(k)); }

Rational pow2(unsigned k) { return Rational(BigInt(BigInt(1) << k)); }

// Coefficient of L_1^{2s} L_j^{2(k+1-s)} in unstable_transfer(k).
Rational unstable_coefficient(unsigned k, unsigned s) {
  return fact(2 * k + 1) / (fact(2 * s) * fact(2 * k + 2 - 2 * s));
}

// Coefficient of L_1^{2(a+b+2)} in stable_transfer(a, b).
Rational stable_coefficient(unsigned a, unsigned b) {
  return Rational(1, 2) * fact(2 * a + 1) * fact(2 * b + 1) / fact(2 * (a + b + 2));
}

void require_key(int genus, int n) {
  if (genus < 0 || n < 1) {
    throw std::invalid_argument("volume: invalid key (g=" + std::to_string(genus) +
                                ", n=" + std::to_string(n) + ")");
  }
}

// Compositions of `total` into `parts` nonnegative integers, in lexicographically
// decreasing order.
void for_each_composition(unsigned total, std::size_t parts,
                          const std::function<void(const Exponents&)>& visit) {
  Exponents current(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned left) {
    if (slot + 1 == parts) {
      current[slot] = left;
      visit(current);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      current[slot] = v;
      rec(slot + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(current);
    return;
  }
  rec(0, total);
}

}  // namespace

EvenPolynomial unstable_transfer(unsigned k) {
  EvenPolynomial p(2);
  for (unsigned s = 0; s <= k + 1; ++s) p.add_term({s, k + 1 - s}, unstable_coefficient(k, s));
  return p;
}

EvenPolynomial stable_transfer(unsigned a, unsigned b) {
  return EvenPolynomial::monomial({a + b + 2}, stable_coefficient(a, b));
}

EvenPolynomial VolumeTable::volume(int genus, int n) {
  require_key(genus, n);
  if (!is_stable(genus, n)) return EvenPolynomial(static_cast<std::size_t>(n));
  if (genus == 0 && n == 3) return EvenPolynomial::constant(3, base_.vol_0_3);
  if (genus == 1 && n == 1) return EvenPolynomial::monomial({1}, base_.vol_1_1);

  const std::pair key{genus, n};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const EvenPolynomial rhs = recursion_right_side(genus, n);
  EvenPolynomial result(static_cast<std::size_t>(n));
  for (const auto& [e, c] : rhs.terms()) result.add_term(e, c / Rational(2 * e[0] + 1));

  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(result)).first->second;
}

EvenPolynomial VolumeTable::recursion_right_side(int genus, int n) {
  require_key(genus, n);
  if (!is_stable(genus, n) || (genus == 0 && n == 3) || (genus == 1 && n == 1)) {
    throw std::invalid_argument("recursion_right_side: requires a stable non-base key");
  }
  const auto arity = static_cast<std::size_t>(n);
  EvenPolynomial rhs(arity);
  Exponents target(arity);

  // (a) boundary 1 shares the removed edge with boundary j.
  const EvenPolynomial smaller = n >= 2 ? volume(genus, n - 1) : EvenPolynomial(0);
  for (std::size_t j = 1; j < arity; ++j) {
    std::vector<std::size_t> labels;  // sub-volume slots 1.. -> surviving labels
    for (std::size_t l = 1; l < arity; ++l) {
      if (l != j) labels.push_back(l);
    }
    for (const auto& [e, c] : smaller.terms()) {
      std::fill(target.begin(), target.end(), 0U);
      for (std::size_t i = 0; i < labels.size(); ++i) target[labels[i]] = e[i + 1];
      const unsigned k = e[0];
      for (unsigned s = 0; s <= k + 1; ++s) {
        target[0] = s;
        target[j] = k + 1 - s;
        rhs.add_term(target, c * unstable_coefficient(k, s));
      }
    }
  }

  // (b) removing the edge lowers the genus.
  if (genus >= 1) {
    const EvenPolynomial lowered = volume(genus - 1, n + 1);
    for (const auto& [e, c] : lowered.terms()) {
      for (std::size_t l = 1; l < arity; ++l) target[l] = e[l + 1];
      target[0] = e[0] + e[1] + 2;
      rhs.add_term(target, c * stable_coefficient(e[0], e[1]));
    }
  }

  // (c) removing the edge disconnects the graph; ordered pairs (g1, I), (g2, J).
  const std::size_t others = arity - 1;
  for (unsigned long mask = 0; mask < (1UL << others); ++mask) {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t i = 0; i < others; ++i) ((mask >> i) & 1UL ? left : right).push_back(i + 1);
    for (int g1 = 0; g1 <= genus; ++g1) {
      const int g2 = genus - g1;
      const int n1 = static_cast<int>(left.size()) + 1;
      const int n2 = static_cast<int>(right.size()) + 1;
      if (!is_stable(g1, n1) || !is_stable(g2, n2)) continue;
      const EvenPolynomial first = volume(g1, n1);
      const EvenPolynomial second = volume(g2, n2);
      for (const auto& [e1, c1] : first.terms()) {
        for (const auto& [e2, c2] : second.terms()) {
          for (std::size_t i = 0; i < left.size(); ++i) target[left[i]] = e1[i + 1];
          for (std::size_t i = 0; i < right.size(); ++i) target[right[i]] = e2[i + 1];
          target[0] = e1[0] + e2[0] + 2;
          rhs.add_term(target, c1 * c2 * stable_coefficient(e1[0], e2[0]));
        }
      }
    }
  }
  return rhs;
}

VolumeTable& default_volume_table() {
  static VolumeTable table;
  return table;
}

EvenPolynomial volume(int genus, int n) { return default_volume_table().volume(genus, n); }

EvenPolynomial volume_from_intersections(int genus, int n, IntersectionTable& table) {
  require_key(genus, n);
  if (!is_stable(genus, n)) {
    throw std::invalid_argument("volume_from_intersections: unstable key");
  }
  EvenPolynomial out(static_cast<std::size_t>(n));
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for_each_composition(static_cast<unsigned>(volume_degree(genus, n)), degrees.size(),
                       [&](const Exponents& k) {
                         Rational weight{1};
                         for (std::size_t i = 0; i < k.size(); ++i) {
                           degrees[i] = static_cast<int>(k[i]);
                           weight /= pow2(k[i]) * fact(k[i]);
                         }
                         out.add_term(k, weight * table.get(genus, degrees));
                       });
  return out;
}

std::vector<std::pair<Exponents, Rational>> intersections_from_volume(const EvenPolynomial& p,
                                                                      int genus, int n) {
  require_key(genus, n);
  if (p.arity() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("intersections_from_volume: arity mismatch");
  }
  const int degree = volume_degree(genus, n);
  if (degree < 0 || !is_homogeneous(p, static_cast<unsigned>(degree))) {
    throw std::invalid_argument("intersections_from_volume: polynomial is not homogeneous of degree " +
                                std::to_string(degree));
  }
  std::vector<std::pair<Exponents, Rational>> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Rational value = c;
    for (unsigned d : e) value *= pow2(d) * fact(d);
    out.emplace_back(e, value);
  }
  return out;
}

}  // namespace symvol
