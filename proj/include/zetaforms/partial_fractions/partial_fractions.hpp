#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zetaforms/exact/rational.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"

namespace zetaforms {

/// R_n(k) = n!^{a-2r} (k-rn+1)_{rn} (k+n+2)_{rn} / ((k+1)_{n+1})^a, exactly.
/// Also valid at any rational point that is not a pole.
Rational rn_at(const FormParams& params, const Rational& k);

/// The coefficients c_{i,j} of R_n(t) = sum_{i=1..a} sum_{j=0..n} c_{i,j} / (t+j+1)^i.
/// Immutable once built.
class PartialFractionTable {
 public:
  /// `coeffs[(i-1)*(n+1) + j]` holds c_{i,j}.
  PartialFractionTable(FormParams params, std::vector<Rational> coeffs);

  [[nodiscard]] const FormParams& params() const { return params_; }
  /// i in 1..a, j in 0..n.
  [[nodiscard]] const Rational& c(int i, int j) const;
  [[nodiscard]] const std::vector<Rational>& flat() const { return coeffs_; }

  friend bool operator==(const PartialFractionTable&, const PartialFractionTable&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const;

  FormParams params_;
  std::vector<Rational> coeffs_;
};

/// Exact partial-fraction table of R_n.  Each column j is the truncated
/// expansion of R_n(t)(t+j+1)^a at t = -j-1+e (order a); c_{i,j} is the
/// coefficient of e^{a-i}.  Columns are computed in parallel and the result
/// does not depend on scheduling.
PartialFractionTable decompose(const FormParams& params);

/// Evaluates sum_{i,j} c_{i,j}/(x+j+1)^i.  x must avoid the poles -1..-n-1.
Rational reconstruct_at(const PartialFractionTable& table, const Rational& x);

/// P_{i,n}(z) = sum_j c_{i,j} z^j for 1 <= i <= a.
Rational p_poly_eval(const PartialFractionTable& table, int i, const Rational& z);

/// P_{0,n}(z) = -sum_i sum_{j>=1} c_{i,j} sum_{k<j} z^{j-k}/(k+1)^i.
Rational p0_eval(const PartialFractionTable& table, const Rational& z);

/// c_{i,n-j} == (-1)^{a-i} (-1)^{an} c_{i,j} for every (i, j).
bool check_symmetry(const PartialFractionTable& table);

/// Exact agreement of the table with R_n at `points` seeded random rationals
/// (numerators and denominators bounded by 10^6, poles avoided).
bool check_reconstruction(const PartialFractionTable& table, std::size_t points,
                          std::uint64_t seed);

/// [d_n^a P_0(1), d_n^{a-1} P_1(1), ..., d_n^0 P_a(1)].  Throws
/// InvariantViolation if any entry is not an integer.
std::vector<BigInt> integer_scaled(const PartialFractionTable& table);

/// True iff d_n^{a-i} c_{i,j} is an integer for every (i, j).
bool coefficients_integral(const PartialFractionTable& table);

/// Copy of `table` with c_{i,j} shifted by `delta`.  Test hook for mutation checks.
PartialFractionTable perturbed(const PartialFractionTable& table, int i, int j,
                               const Rational& delta);

}  // namespace zetaforms
