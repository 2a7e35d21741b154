#include "zetaforms/asymptotics/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetaforms/errors.hpp"

namespace zetaforms {

RatePoint RatePoint::from_magnitude(long n, double magnitude) {
  if (!(magnitude > 0.0)) {
    throw DomainError("rate estimation needs positive magnitudes (n=" + std::to_string(n) + ")");
  }
  return {n, std::log(magnitude)};
}

RateEstimate empirical_rate(std::vector<RatePoint> values, RateMethod method) {
  if (values.size() < 3) throw DomainError("rate estimation needs at least 3 points");
  for (const auto& v : values) {
    if (!std::isfinite(v.log_magnitude)) throw DomainError("rate estimation needs positive magnitudes");
  }
  std::sort(values.begin(), values.end(),
            [](const RatePoint& x, const RatePoint& y) { return x.n < y.n; });
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].n == values[i - 1].n) throw DomainError("duplicate index in rate data");
  }

  RateEstimate out;
  out.method = method;
  if (method == RateMethod::kRootTest) {
    const auto& last = values.back();
    if (last.n <= 0) throw DomainError("root test needs a positive index");
    out.estimate = std::exp(last.log_magnitude / static_cast<double>(last.n));
  } else {
    const std::size_t steps = std::min<std::size_t>(3, values.size() - 1);
    double sum = 0.0;
    double lo = HUGE_VAL;
    double hi = -HUGE_VAL;
    for (std::size_t s = 0; s < steps; ++s) {
      const auto& b = values[values.size() - 1 - s];
      const auto& a = values[values.size() - 2 - s];
      const double step = std::exp((b.log_magnitude - a.log_magnitude) / static_cast<double>(b.n - a.n));
      sum += step;
      lo = std::min(lo, step);
      hi = std::max(hi, step);
    }
    out.estimate = sum / static_cast<double>(steps);
    out.spread = (hi - lo) / lo;
  }
  out.values = std::move(values);
  return out;
}

}  // namespace zetaforms
