#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Upper bound on s_{r,a} = lim |S_n(1)|^{1/n}:
///   (2r+1)^{2r+1} (ra+r)^{ra+r} (a-2r)^{a-2r} / (ra+a-r)^{ra+a-r}.
struct SBound {
  double log_value = 0.0;
  std::optional<double> value;  // empty when exp(log_value) is not representable
};

SBound s_bound(int r, int a);
/// The same bound as an exact rational.
Rational s_bound_exact(int r, int a);

/// Growth bound 2^{a-2r} (2r+1)^{2r+1} on limsup |P_{i,n}(1)|^{1/n}.
double p_growth_bound(int r, int a);
double log_p_growth_bound(int r, int a);

/// 1 - log(alpha)/log(beta).  Throws CriterionInapplicable unless
/// log_alpha < 0 < log_beta.
double nesterenko_lb(double log_alpha, double log_beta);

struct FG {
  double f = 0.0;
  double g = 0.0;
};

/// f(a,r) = (a-2r)log 2 + (ra+a-r)log(ra+a-r) - (ra+r)log(ra+r) - (a-2r)log(a-2r)
/// g(a,r) = a + (a-2r)log 2 + (2r+1)log(2r+1)
FG f_g(int a, int r);

struct BoundReport {
  int a = 0;
  int r = 0;
  double log_s_bound = 0.0;
  double log_alpha = 0.0;
  double log_beta = 0.0;
  double f = 0.0;
  double g = 0.0;
  double delta_lb = 0.0;

  /// alpha < 1, i.e. the criterion itself applies to this (a, r).
  [[nodiscard]] bool criterion_applicable() const { return log_alpha < 0.0; }
};

BoundReport bound_report(int a, int r);

/// The admissible integer nearest to a/(log a)^2, clamped to [1, ceil(a/2)-1];
/// exact half-integers round down.
int r_default(int a);

/// Report for the r maximizing f/g over 1 <= r < a/2; ties go to the smallest r.
/// Any a >= 3 is accepted.
BoundReport optimize_r(long a);
/// Exhaustive scan over every admissible r.
BoundReport optimize_r_exhaustive(long a);

/// Smallest odd a >= 3 with optimize_r(a).delta_lb >= target.  Throws
/// ScanCapExceeded past `cap`.
long min_a_for_dim(double target, long cap = 1'000'000);

struct AsymptoticPoint {
  long a = 0;
  int r = 0;
  double delta_lb = 0.0;
  double ratio = 0.0;  // delta_lb (1 + log 2) / log a
};

std::vector<AsymptoticPoint> asymptotic_check(const std::vector<long>& a_grid);

/// 1/(1 + log 2), the slope of the dimension bound in log a.
double theorem_slope();

nlohmann::json report_to_json(const BoundReport& report);

}  // namespace zetaforms
