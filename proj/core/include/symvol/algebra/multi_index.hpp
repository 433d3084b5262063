#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symvol/algebra/rational.hpp"

namespace symvol {

/// One nonnegative index per variable. For an EvenPolynomial the entry d_i
/// means L_i^{2 d_i}; for a Correlator it means z_i^{-2 d_i - 2}.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

/// Graded lexicographic order: lower total degree first, then the vector with
/// the larger leading entry first (L1 > L2 > ...).
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

/// Sparse map from exponent vectors of fixed length to nonzero rationals.
///
/// Shared storage for EvenPolynomial and Correlator; the tag keeps the two
/// from mixing. Zero coefficients are never stored.
template <class Tag>
class MultiIndexSeries {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  MultiIndexSeries() = default;
  explicit MultiIndexSeries(std::size_t arity) : arity_(arity) {}

  static MultiIndexSeries constant(std::size_t arity, const Rational& value) {
    MultiIndexSeries s(arity);
    s.add_term(Exponents(arity, 0), value);
    return s;
  }

  static MultiIndexSeries monomial(const Exponents& exponents, const Rational& value) {
    MultiIndexSeries s(exponents.size());
    s.add_term(exponents, value);
    return s;
  }

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational{} : it->second;
  }

  /// Adds value to the coefficient of the given monomial, pruning zeros.
  void add_term(const Exponents& exponents, const Rational& value) {
    if (exponents.size() != arity_) {
      throw std::invalid_argument("exponent vector of length " +
                                  std::to_string(exponents.size()) +
                                  " in a series of arity " + std::to_string(arity_));
    }
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponents, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiIndexSeries& operator+=(const MultiIndexSeries& other) {
    require_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  MultiIndexSeries& operator-=(const MultiIndexSeries& other) {
    require_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  MultiIndexSeries& operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
  }

  friend MultiIndexSeries operator+(MultiIndexSeries a, const MultiIndexSeries& b) {
    return a += b;
  }
  friend MultiIndexSeries operator-(MultiIndexSeries a, const MultiIndexSeries& b) {
    return a -= b;
  }
  friend MultiIndexSeries operator*(MultiIndexSeries a, const Rational& s) { return a *= s; }
  friend MultiIndexSeries operator*(const Rational& s, MultiIndexSeries a) { return a *= s; }

  friend bool operator==(const MultiIndexSeries& a, const MultiIndexSeries& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Permutes variables: slot i of the result holds slot perm[i] of this.
  MultiIndexSeries permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != arity_) throw std::invalid_argument("permutation length mismatch");
    MultiIndexSeries out(arity_);
    for (const auto& [e, c] : terms_) {
      Exponents f(arity_);
      for (std::size_t i = 0; i < arity_; ++i) f[i] = e.at(perm[i]);
      out.add_term(f, c);
    }
    return out;
  }

  void require_same_arity(const MultiIndexSeries& other) const {
    if (other.arity_ != arity_) {
      throw std::invalid_argument("arity mismatch: " + std::to_string(arity_) + " vs " +
                                  std::to_string(other.arity_));
    }
  }

 private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

/// Re-indexes variables: variable i of `series` becomes variable slot_map[i]
/// (0-based) of a series with `new_arity` variables. Unmapped slots get
/// exponent 0. Throws std::invalid_argument if slot_map is not injective or
/// out of range.
template <class Tag>
MultiIndexSeries<Tag> embed_variables(const MultiIndexSeries<Tag>& series,
                                      std::span<const std::size_t> slot_map,
                                      std::size_t new_arity) {
  if (slot_map.size() != series.arity()) {
    throw std::invalid_argument("embed_variables: slot map has " +
                                std::to_string(slot_map.size()) + " entries for arity " +
                                std::to_string(series.arity()));
  }
  std::vector<bool> used(new_arity, false);
  for (std::size_t target : slot_map) {
    if (target >= new_arity) throw std::invalid_argument("embed_variables: slot out of range");
    if (used[target]) throw std::invalid_argument("embed_variables: slot map not injective");
    used[target] = true;
  }
  MultiIndexSeries<Tag> out(new_arity);
  for (const auto& [e, c] : series.terms()) {
    Exponents f(new_arity, 0);
    for (std::size_t i = 0; i < slot_map.size(); ++i) f[slot_map[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

}  // namespace symvol
