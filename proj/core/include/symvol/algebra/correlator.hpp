#pragma once

#include "symvol/algebra/even_polynomial.hpp"
#include "symvol/algebra/multi_index.hpp"

namespace symvol {

struct CorrelatorTag {};

/// Laurent polynomial sum c * prod_i z_i^{-(2 d_i + 2)}; the exponent vector
/// stores the d_i.
using Correlator = MultiIndexSeries<CorrelatorTag>;

/// Laplace transform of L_1...L_n * p(L): each L^{2d} becomes (2d+1)! z^{-2d-2}.
Correlator laplace(const EvenPolynomial& p);

}  // namespace symvol
