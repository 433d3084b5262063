#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symvol/algebra/correlator.hpp"
#include "symvol/algebra/even_polynomial.hpp"

namespace symvol::cli {

/// "1/48 * L1^2", terms joined by " + " (or " - ") in graded-lex order; "0" if empty.
std::string format_polynomial(const EvenPolynomial& p);

/// "1/8 * z1^-4"; every slot is printed as z_i^-(2d_i+2).
std::string format_correlator(const Correlator& w);

/// Comma-separated rationals ("3,4,5/2"). Throws std::invalid_argument.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated integers. Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace symvol::cli
