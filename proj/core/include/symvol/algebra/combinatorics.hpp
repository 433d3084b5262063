#pragma once

#include "symvol/algebra/rational.hpp"

namespace symvol {

/// k!
BigInt factorial(unsigned k);

/// m!! for odd m >= -1, with (-1)!! = 1. Throws std::domain_error otherwise.
BigInt double_factorial_odd(int m);

}  // namespace symvol
