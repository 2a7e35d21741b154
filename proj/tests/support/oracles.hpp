#pragma once

// Test-only oracles.  Nothing here calls into the code paths they check.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zetaforms/exact/rational.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"

namespace zetaforms::testing {

/// R_n(x) straight from its product definition, one linear factor at a time.
inline Rational rn_product(const FormParams& p, const Rational& x) {
  Rational num = 1;
  for (int k = 1; k <= p.n; ++k) {
    for (int e = 0; e < p.a - 2 * p.r; ++e) num *= Rational(k);
  }
  const long rn = static_cast<long>(p.r) * p.n;
  for (long i = 0; i < rn; ++i) num *= x - Rational(rn - 1 - i);
  for (long i = 0; i < rn; ++i) num *= x + Rational(p.n + 2 + i);
  Rational den = 1;
  for (int i = 0; i <= p.n; ++i) {
    for (int e = 0; e < p.a; ++e) den *= x + Rational(1 + i);
  }
  return num / den;
}

/// Solves A x = b exactly by Gauss-Jordan elimination (A square, nonsingular).
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

/// Partial-fraction coefficients by matching sum c_{i,j}/(x+j+1)^i to R_n(x)
/// at a(n+1) distinct rational points.  Returned in the table's flat layout,
/// c_{i,j} at (i-1)(n+1)+j.
inline std::vector<Rational> partial_fractions_by_linear_system(const FormParams& p) {
  const std::size_t unknowns = static_cast<std::size_t>(p.a) * (p.n + 1);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < unknowns; ++k) {
    // Distinct positive points 1/2, 5/3, 9/4, ...
    const Rational x(BigInt(4 * static_cast<long>(k) + 1), BigInt(static_cast<long>(k) + 2));
    std::vector<Rational> row(unknowns);
    for (int i = 1; i <= p.a; ++i) {
      for (int j = 0; j <= p.n; ++j) {
        Rational power = 1;
        for (int e = 0; e < i; ++e) power *= x + Rational(j + 1);
        row[static_cast<std::size_t>(i - 1) * (p.n + 1) + j] = Rational(1) / power;
      }
    }
    rows.push_back(std::move(row));
    rhs.push_back(rn_product(p, x));
  }
  return solve_exact(std::move(rows), std::move(rhs));
}

}  // namespace zetaforms::testing
