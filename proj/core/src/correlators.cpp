#include "symvol/correlators.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace symvol {

namespace {

void require_stable(int genus, int n, const char* who) {
  if (n < 1 || !is_stable(genus, n)) {
    throw std::invalid_argument(std::string(who) + ": unstable key (g=" + std::to_string(genus) +
                                ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

Correlator correlator_laplace(int genus, int n, VolumeTable& volumes) {
  require_stable(genus, n, "correlator_laplace");
  return laplace(volumes.volume(genus, n));
}

Correlator j_term_operator(unsigned d) {
  Correlator out(2);
  for (unsigned s = 0; s <= d + 1; ++s) out.add_term({d + 1 - s, s}, Rational(2 * s + 1));
  return out;
}

Correlator diagonal_stable_term(const Correlator& w) {
  if (w.arity() < 2) throw std::invalid_argument("diagonal_stable_term: arity < 2");
  Correlator out(w.arity() - 1);
  Exponents target(w.arity() - 1);
  const Rational half(Rational(1) / Rational(2));
  for (const auto& [e, c] : w.terms()) {
    target[0] = e[0] + e[1] + 2;
    for (std::size_t i = 2; i < e.size(); ++i) target[i - 1] = e[i];
    out.add_term(target, half * c);
  }
  return out;
}

Correlator AiryRecursion::correlator(int genus, int n) {
  require_stable(genus, n, "correlator_eo");
  if (genus == 0 && n == 3) return Correlator::constant(3, Rational(1));
  if (genus == 1 && n == 1) {
    // (1 / 2 z_1^2) * W_{0,2}(zeta, -zeta) with W_{0,2}(zeta, -zeta) = 1 / (4 zeta^2).
    return Correlator::monomial({1}, Rational(1) / Rational(8));
  }

  const std::pair key{genus, n};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const auto arity = static_cast<std::size_t>(n);
  Correlator result(arity);
  Exponents target(arity);
  const Rational half(Rational(1) / Rational(2));

  // Unstable terms: W_{0,2} paired with W_{g,n-1}(zeta, ...).
  if (n >= 2 && is_stable(genus, n - 1)) {
    const Correlator smaller = correlator(genus, n - 1);
    for (std::size_t j = 1; j < arity; ++j) {
      std::vector<std::size_t> labels;
      for (std::size_t l = 1; l < arity; ++l) {
        if (l != j) labels.push_back(l);
      }
      for (const auto& [e, c] : smaller.terms()) {
        for (std::size_t i = 0; i < labels.size(); ++i) target[labels[i]] = e[i + 1];
        const Correlator op = j_term_operator(e[0]);
        for (const auto& [pair, weight] : op.terms()) {
          target[0] = pair[0];
          target[j] = pair[1];
          result.add_term(target, c * weight);
        }
      }
    }
  }

  // W_{g-1,n+1}(zeta, -zeta, ...).
  if (genus >= 1 && is_stable(genus - 1, n + 1)) {
    result += diagonal_stable_term(correlator(genus - 1, n + 1));
  }

  // Stable splittings W_{g1}(zeta, z_I) W_{g2}(-zeta, z_J).
  const std::size_t others = arity - 1;
  for (unsigned long mask = 0; mask < (1UL << others); ++mask) {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t i = 0; i < others; ++i) ((mask >> i) & 1UL ? left : right).push_back(i + 1);
    for (int g1 = 0; g1 <= genus; ++g1) {
      const int n1 = static_cast<int>(left.size()) + 1;
      const int n2 = static_cast<int>(right.size()) + 1;
      if (!is_stable(g1, n1) || !is_stable(genus - g1, n2)) continue;
      const Correlator first = correlator(g1, n1);
      const Correlator second = correlator(genus - g1, n2);
      for (const auto& [e1, c1] : first.terms()) {
        for (const auto& [e2, c2] : second.terms()) {
          for (std::size_t i = 0; i < left.size(); ++i) target[left[i]] = e1[i + 1];
          for (std::size_t i = 0; i < right.size(); ++i) target[right[i]] = e2[i + 1];
          target[0] = e1[0] + e2[0] + 2;
          result.add_term(target, half * c1 * c2);
        }
      }
    }
  }

  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(result)).first->second;
}

AiryRecursion& default_airy_recursion() {
  static AiryRecursion recursion;
  return recursion;
}

Correlator correlator_eo(int genus, int n) { return default_airy_recursion().correlator(genus, n); }

}  // namespace symvol
