#include "symvol/algebra/even_polynomial.hpp"

#include <stdexcept>
#include <string>

#include "symvol/algebra/combinatorics.hpp"
#include "symvol/algebra/correlator.hpp"

namespace symvol {

EvenPolynomial operator*(const EvenPolynomial& a, const EvenPolynomial& b) {
  a.require_same_arity(b);
  EvenPolynomial out(a.arity());
  Exponents sum(a.arity());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

Rational evaluate(const EvenPolynomial& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) {
    throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) +
                                " entries for arity " + std::to_string(p.arity()));
  }
  std::vector<Rational> squares;
  squares.reserve(point.size());
  for (const auto& x : point) {
    if (x.sign() < 0) throw std::invalid_argument("evaluate: negative coordinate");
    squares.push_back(x * x);
  }
  Rational total;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(squares[i], e[i]);
    }
    total += term;
  }
  return total;
}

bool is_homogeneous(const EvenPolynomial& p, unsigned degree) {
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != degree) return false;
  }
  return true;
}

Correlator laplace(const EvenPolynomial& p) {
  Correlator out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Rational scale = c;
    for (unsigned d : e) scale *= Rational(factorial(2 * d + 1));
    out.add_term(e, scale);
  }
  return out;
}

}  // namespace symvol
