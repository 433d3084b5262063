#include "symvol/ribbon/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symvol::ribbon {

namespace {

std::size_t column_count(const Matrix& m) { return m.empty() ? 0 : m.front().size(); }

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<Rational>(cols));
}

std::size_t rank(Matrix m) { return reduce(m, column_count(m)).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  Rational det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve_unique(const Matrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.size()) throw std::invalid_argument("solve_unique: size mismatch");
  const std::size_t cols = column_count(m);
  Matrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  const auto pivots = reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (pivots.size() != cols) return std::nullopt;                      // not unique
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<std::vector<Rational>> null_space(const Matrix& m, std::size_t cols) {
  Matrix reduced = m;
  const auto pivots = reduce(reduced, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t r = 0; r < n; ++r) {
    if (aug[r].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    aug[r].resize(2 * n);
    aug[r][n + r] = Rational(1);
  }
  const auto pivots = reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(aug[r].begin() + static_cast<long>(n), aug[r].end());
  return inv;
}

bool is_antisymmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j <= i; ++j) {
      if (m[i][j] != -m[j][i]) return false;
    }
  }
  return true;
}

Rational pfaffian(Matrix m) {
  const std::size_t n = m.size();
  if (!is_antisymmetric(m)) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");

  auto swap_index = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  // Adds f * (row/col src) to (row/col dst); a congruence of determinant one.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) m[dst][c] += f * m[src][c];
    for (std::size_t r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
  };

  Rational result{1};
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && m[k][pivot].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k + 1) {
      swap_index(pivot, k + 1);
      result = -result;
    }
    const Rational a = m[k][k + 1];
    result *= a;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!m[k][i].is_zero()) add_multiple(i, k + 1, -m[k][i] / a);
      if (!m[k + 1][i].is_zero()) add_multiple(i, k, m[k + 1][i] / a);
    }
  }
  return result;
}

}  // namespace symvol::ribbon
