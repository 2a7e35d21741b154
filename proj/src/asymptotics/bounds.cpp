#include "zetaforms/asymptotics/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetaforms/errors.hpp"

namespace zetaforms {
namespace {

// Candidates are scanned exhaustively up to this many values of r.
constexpr long kExhaustiveLimit = 4096;
constexpr long kRefineWindow = 8;

void require_admissible(long a, long r) {
  if (r < 1 || 2 * r >= a) {
    throw DomainError("need 1 <= r < a/2, got a=" + std::to_string(a) + ", r=" + std::to_string(r));
  }
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

long max_r(long a) { return (a + 1) / 2 - 1; }

FG f_g_long(long a, long r) {
  require_admissible(a, r);
  const double ad = static_cast<double>(a);
  const double rd = static_cast<double>(r);
  const double ln2 = std::numbers::ln2;
  FG out;
  out.f = (ad - 2 * rd) * ln2 + xlogx(rd * ad + ad - rd) - xlogx(rd * ad + rd) - xlogx(ad - 2 * rd);
  out.g = ad + (ad - 2 * rd) * ln2 + xlogx(2 * rd + 1);
  return out;
}

double ratio_at(long a, long r) {
  const FG fg = f_g_long(a, r);
  return fg.f / fg.g;
}

double log_s_bound_long(long a, long r) {
  require_admissible(a, r);
  const double ad = static_cast<double>(a);
  const double rd = static_cast<double>(r);
  return xlogx(2 * rd + 1) + xlogx(rd * ad + rd) + xlogx(ad - 2 * rd) - xlogx(rd * ad + ad - rd);
}

BoundReport report_long(long a, long r) {
  BoundReport rep;
  rep.a = static_cast<int>(std::min<long>(a, std::numeric_limits<int>::max()));
  rep.r = static_cast<int>(r);
  const FG fg = f_g_long(a, r);
  rep.f = fg.f;
  rep.g = fg.g;
  rep.delta_lb = fg.f / fg.g;
  rep.log_s_bound = log_s_bound_long(a, r);
  rep.log_alpha = 2.0 * (static_cast<double>(a) + rep.log_s_bound);
  rep.log_beta = 2.0 * fg.g;
  return rep;
}

/// Best r in [lo, hi], smallest r on ties.
long scan(long a, long lo, long hi) {
  long best = lo;
  double best_value = ratio_at(a, lo);
  for (long r = lo + 1; r <= hi; ++r) {
    const double v = ratio_at(a, r);
    if (v > best_value) {
      best_value = v;
      best = r;
    }
  }
  return best;
}

}  // namespace

SBound s_bound(int r, int a) {
  SBound out;
  out.log_value = log_s_bound_long(a, r);
  if (out.log_value < std::log(std::numeric_limits<double>::max()) &&
      out.log_value > std::log(std::numeric_limits<double>::min())) {
    out.value = std::exp(out.log_value);
  }
  return out;
}

Rational s_bound_exact(int r, int a) {
  require_admissible(a, r);
  auto power = [](long base, long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
  };
  const long ra = static_cast<long>(r) * a;
  const BigInt num = power(2L * r + 1, 2L * r + 1) * power(ra + r, ra + r) * power(a - 2L * r, a - 2L * r);
  return Rational(num, power(ra + a - r, ra + a - r));
}

double log_p_growth_bound(int r, int a) {
  require_admissible(a, r);
  return (a - 2.0 * r) * std::numbers::ln2 + xlogx(2.0 * r + 1.0);
}

double p_growth_bound(int r, int a) { return std::exp(log_p_growth_bound(r, a)); }

double nesterenko_lb(double log_alpha, double log_beta) {
  if (!(log_alpha < 0.0)) throw CriterionInapplicable("criterion needs alpha < 1");
  if (!(log_beta > 0.0)) throw CriterionInapplicable("criterion needs beta > 1");
  return 1.0 - log_alpha / log_beta;
}

FG f_g(int a, int r) { return f_g_long(a, r); }

BoundReport bound_report(int a, int r) { return report_long(a, r); }

int r_default(int a) {
  if (a < 3) throw DomainError("r_default needs a >= 3");
  const double la = std::log(static_cast<double>(a));
  const double x = static_cast<double>(a) / (la * la);
  long r = static_cast<long>(std::ceil(x - 0.5));  // nearest, halves round down
  r = std::clamp(r, 1L, max_r(a));
  return static_cast<int>(r);
}

BoundReport optimize_r_exhaustive(long a) {
  if (a < 3) throw DomainError("optimize_r needs a >= 3");
  return report_long(a, scan(a, 1, max_r(a)));
}

BoundReport optimize_r(long a) {
  if (a < 3) throw DomainError("optimize_r needs a >= 3");
  const long hi_r = max_r(a);
  if (hi_r <= kExhaustiveLimit) return optimize_r_exhaustive(a);
  // f(a,.) is positive and concave on [1, a/2), g(a,.) positive and convex, so
  // f/g is strictly quasiconcave in r: ternary search, then a local scan.
  long lo = 1;
  long hi = hi_r;
  while (hi - lo > 2 * kRefineWindow) {
    const long m1 = lo + (hi - lo) / 3;
    const long m2 = hi - (hi - lo) / 3;
    if (ratio_at(a, m1) < ratio_at(a, m2)) {
      lo = m1 + 1;
    } else {
      hi = m2;
    }
  }
  return report_long(a, scan(a, std::max(1L, lo - kRefineWindow), std::min(hi_r, hi + kRefineWindow)));
}

long min_a_for_dim(double target, long cap) {
  if (!(target > 0.0)) throw DomainError("target must be positive");
  for (long a = 3; a <= cap; a += 2) {
    if (optimize_r(a).delta_lb >= target) return a;
  }
  throw ScanCapExceeded("no odd a <= " + std::to_string(cap) + " reaches delta_lb >= " +
                        std::to_string(target));
}

std::vector<AsymptoticPoint> asymptotic_check(const std::vector<long>& a_grid) {
  std::vector<AsymptoticPoint> out;
  long previous = 0;
  for (long a : a_grid) {
    if (a < 10) throw DomainError("asymptotic grid needs a >= 10");
    if (a <= previous) throw DomainError("asymptotic grid must be increasing");
    previous = a;
    const BoundReport rep = optimize_r(a);
    out.push_back({a, rep.r, rep.delta_lb,
                   rep.delta_lb * (1.0 + std::numbers::ln2) / std::log(static_cast<double>(a))});
  }
  return out;
}

double theorem_slope() { return 1.0 / (1.0 + std::numbers::ln2); }

nlohmann::json report_to_json(const BoundReport& report) {
  return {{"a", report.a},         {"r", report.r},
          {"f", report.f},         {"g", report.g},
          {"delta_lb", report.delta_lb}, {"log_alpha", report.log_alpha},
          {"log_beta", report.log_beta}};
}

}  // namespace zetaforms
