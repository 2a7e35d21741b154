#pragma once

#include <vector>

namespace zetaforms {

/// A sequence value, stored as log|v_n| so tiny and huge magnitudes survive.
struct RatePoint {
  long n = 0;
  double log_magnitude = 0.0;

  /// Throws DomainError for nonpositive magnitudes.
  static RatePoint from_magnitude(long n, double magnitude);
};

enum class RateMethod { kRootTest, kRatioTest };

struct RateEstimate {
  std::vector<RatePoint> values;
  RateMethod method = RateMethod::kRootTest;
  double estimate = 0.0;
  /// For the ratio test: (max - min)/min over the averaged step estimates.
  double spread = 0.0;
};

/// Empirical limsup |v_n|^{1/n}.  Root test: |v_N|^{1/N} at the largest n.
/// Ratio test: |v_{n+d}/v_n|^{1/d} averaged over the last (up to) three steps.
/// Needs at least three points.
RateEstimate empirical_rate(std::vector<RatePoint> values, RateMethod method);

}  // namespace zetaforms
