#pragma once

// Small dense exact linear algebra over Rational: Gaussian elimination with
// partial (first-nonzero) pivoting, determinants, and leading principal
// minors. Matrices here are tiny (intersection forms on bases of size <= ~15),
// so simplicity and exactness win over asymptotics.

#include "kdelta/rational.hpp"

#include <optional>
#include <vector>

namespace kdelta {

using Matrix = std::vector<std::vector<Rational>>;

// Solves A * X = B exactly for possibly several right-hand sides (columns of
// B). Returns nullopt when A is singular.
inline std::optional<Matrix> solve_linear_multi(Matrix a, Matrix b) {
  const size_t n = a.size();
  if (n == 0) return Matrix{};
  const size_t m = b.empty() ? 0 : b[0].size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      for (size_t j = 0; j < m; ++j) b[row][j] -= f * b[col][j];
    }
  }
  Matrix x(n, std::vector<Rational>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) x[i][j] = b[i][j] / a[i][i];
  return x;
}

inline std::optional<std::vector<Rational>> solve_linear(
    const Matrix& a, const std::vector<Rational>& b) {
  Matrix bcol(b.size(), std::vector<Rational>(1));
  for (size_t i = 0; i < b.size(); ++i) bcol[i][0] = b[i];
  auto x = solve_linear_multi(a, bcol);
  if (!x) return std::nullopt;
  std::vector<Rational> out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = (*x)[i][0];
  return out;
}

inline Rational determinant(Matrix a) {
  const size_t n = a.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

// A symmetric matrix is negative definite iff its leading principal minors
// alternate sign starting negative: (-1)^k det(A_k) > 0 for k = 1..n.
inline bool is_negative_definite_matrix(const Matrix& a) {
  const size_t n = a.size();
  for (size_t k = 1; k <= n; ++k) {
    Matrix lead(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    Rational d = determinant(std::move(lead));
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

}  // namespace kdelta
