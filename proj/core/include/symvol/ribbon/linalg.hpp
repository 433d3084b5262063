#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symvol/algebra/rational.hpp"

namespace symvol::ribbon {

/// Dense row-major matrix of exact rationals.
using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);

std::size_t rank(Matrix m);

Rational determinant(Matrix m);

/// Solves m x = rhs when the solution exists and is unique; nullopt otherwise.
std::optional<std::vector<Rational>> solve_unique(const Matrix& m, const std::vector<Rational>& rhs);

/// Basis of {x : m x = 0} (m has `cols` columns even if it has no rows).
std::vector<std::vector<Rational>> null_space(const Matrix& m, std::size_t cols);

/// Inverse of a square nonsingular matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

bool is_antisymmetric(const Matrix& m);

/// Exact Pfaffian by congruence elimination. Throws std::invalid_argument for
/// odd dimension or a matrix that is not antisymmetric.
Rational pfaffian(Matrix m);

}  // namespace symvol::ribbon
