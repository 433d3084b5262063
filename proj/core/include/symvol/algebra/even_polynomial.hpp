#pragma once

#include <span>

#include "symvol/algebra/multi_index.hpp"

namespace symvol {

struct EvenPolynomialTag {};

/// Polynomial in L_1^2, ..., L_n^2 with rational coefficients.
using EvenPolynomial = MultiIndexSeries<EvenPolynomialTag>;

/// Distributive product; both operands must have equal arity.
EvenPolynomial operator*(const EvenPolynomial& a, const EvenPolynomial& b);

/// Exact value at a point of nonnegative rationals (one entry per variable).
Rational evaluate(const EvenPolynomial& p, std::span<const Rational> point);

/// True when every monomial has exponent weight sum_i d_i == degree.
bool is_homogeneous(const EvenPolynomial& p, unsigned degree);

}  // namespace symvol
