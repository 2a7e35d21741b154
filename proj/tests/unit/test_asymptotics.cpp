#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "zetaforms/asymptotics/bounds.hpp"
#include "zetaforms/asymptotics/rates.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/exact/rational.hpp"

using namespace zetaforms;

namespace {

/// The growth bound as an exact rational, assembled factor by factor.
Rational s_bound_oracle(long r, long a) {
  Rational v = 1;
  for (long k = 0; k < 2 * r + 1; ++k) v *= Rational(2 * r + 1);
  for (long k = 0; k < r * a + r; ++k) v *= Rational(r * a + r);
  for (long k = 0; k < a - 2 * r; ++k) v *= Rational(a - 2 * r);
  for (long k = 0; k < r * a + a - r; ++k) v /= Rational(r * a + a - r);
  return v;
}

std::vector<RatePoint> geometric(double ratio, int count) {
  std::vector<RatePoint> out;
  for (int n = 1; n <= count; ++n) out.push_back({n, n * std::log(ratio)});
  return out;
}

}  // namespace

TEST_CASE("s_bound examples") {
  CHECK(s_bound_exact(1, 3) == Rational(BigInt(6912), BigInt(3125)));
  CHECK(*s_bound(1, 3).value == doctest::Approx(2.21184).epsilon(1e-12));
  CHECK(s_bound_exact(1, 5) == Rational(BigInt(34012224), BigInt(387420489)));
  CHECK(*s_bound(1, 5).value == doctest::Approx(0.0877914951989026).epsilon(1e-12));
  CHECK(*s_bound(2, 5).value == doctest::Approx(92.01).epsilon(1e-3));
  CHECK_THROWS_AS(s_bound(3, 5), DomainError);
  CHECK_THROWS_AS(s_bound(0, 5), DomainError);
}

TEST_CASE("s_bound agrees with the factor-by-factor rational") {
  for (long a = 3; a <= 25; ++a) {
    for (long r = 1; 2 * r < a; ++r) {
      CHECK(s_bound_exact(static_cast<int>(r), static_cast<int>(a)) == s_bound_oracle(r, a));
    }
  }
}

TEST_CASE("huge parameters stay in log space") {
  const auto big = s_bound(20, 100001);
  CHECK(std::isfinite(big.log_value));
  CHECK_FALSE(big.value.has_value());
}

TEST_CASE("p_growth_bound examples") {
  CHECK(p_growth_bound(1, 3) == doctest::Approx(54));
  CHECK(p_growth_bound(1, 5) == doctest::Approx(216));
  CHECK(p_growth_bound(2, 5) == doctest::Approx(6250));
  CHECK(log_p_growth_bound(2, 5) == doctest::Approx(std::log(6250.0)));
}

TEST_CASE("nesterenko_lb") {
  CHECK(nesterenko_lb(-1, 1) == doctest::Approx(2));
  CHECK(nesterenko_lb(-std::log(2.0), std::log(4.0)) == doctest::Approx(1.5));
  CHECK_THROWS_AS(nesterenko_lb(0.1, 1), CriterionInapplicable);
  CHECK_THROWS_AS(nesterenko_lb(0.0, 1), CriterionInapplicable);
  CHECK_THROWS_AS(nesterenko_lb(-1, 0), CriterionInapplicable);
  for (double la = -5.0; la < -0.5; la += 0.25) CHECK(nesterenko_lb(la, 3.0) > nesterenko_lb(la + 0.25, 3.0));
}

TEST_CASE("f and g") {
  const auto fg = f_g(3, 1);
  CHECK(fg.f == doctest::Approx(3.1951592982508847).epsilon(1e-12));
  CHECK(fg.g == doctest::Approx(6.9889840465642745).epsilon(1e-12));
  CHECK(fg.f / fg.g == doctest::Approx(0.4572).epsilon(2e-4));
  CHECK(f_g(5, 1).f > 0);
  CHECK(f_g(5, 1).g > 0);
}

TEST_CASE("algebraic identity f = g - a - log s on random parameters") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick_a(3, 5000);
  for (int trial = 0; trial < 500; ++trial) {
    const int a = pick_a(rng);
    std::uniform_int_distribution<int> pick_r(1, (a - 1) / 2);
    const int r = pick_r(rng);
    const auto fg = f_g(a, r);
    const double log_s = s_bound(r, a).log_value;
    CHECK(std::fabs((fg.g - a - log_s) - fg.f) < 1e-9 * std::max(1.0, std::fabs(fg.f)));
    const auto report = bound_report(a, r);
    CHECK(report.delta_lb == doctest::Approx(fg.f / fg.g).epsilon(1e-12));
    CHECK(report.log_alpha == doctest::Approx(2 * (a + log_s)).epsilon(1e-12));
    if (report.criterion_applicable()) {
      CHECK(nesterenko_lb(report.log_alpha, report.log_beta) == doctest::Approx(report.delta_lb).epsilon(1e-9));
    } else {
      CHECK_THROWS_AS(nesterenko_lb(report.log_alpha, report.log_beta), CriterionInapplicable);
    }
  }
}

TEST_CASE("criterion applicability at (r, a) = (2, 5)") {
  const auto report = bound_report(5, 2);
  CHECK_FALSE(report.criterion_applicable());
  CHECK_THROWS_AS(nesterenko_lb(report.log_alpha, report.log_beta), CriterionInapplicable);
  CHECK_FALSE(bound_report(3, 1).criterion_applicable());
  CHECK(optimize_r(11).criterion_applicable());
}

TEST_CASE("r_default") {
  CHECK(r_default(3) == 1);
  CHECK(r_default(100) == 5);
  CHECK(r_default(1000) == 21);
  for (int a = 3; a <= 3000; ++a) {
    const int r = r_default(a);
    CHECK(r >= 1);
    CHECK(2 * r < a);
  }
  CHECK_THROWS_AS(r_default(2), DomainError);
}

TEST_CASE("optimize_r") {
  const auto three = optimize_r(3);
  CHECK(three.r == 1);
  CHECK(three.delta_lb == doctest::Approx(0.4572).epsilon(2e-4));

  const auto r169 = optimize_r(169);
  const auto scan = optimize_r_exhaustive(169);
  CHECK(r169.r == scan.r);
  CHECK(r169.delta_lb == scan.delta_lb);
  for (int r = 1; 2 * r < 169; ++r) CHECK(bound_report(169, r).delta_lb <= r169.delta_lb);

  for (int a = 3; a <= 401; a += 2) {
    const auto best = optimize_r(a);
    const auto fg = f_g(a, r_default(a));
    CHECK(best.delta_lb >= fg.f / fg.g);
  }
  CHECK_THROWS_AS(optimize_r(2), DomainError);
}

TEST_CASE("ternary search agrees with the exhaustive scan past the scan limit") {
  for (long a : {4097L, 5001L, 10001L, 33333L, 100001L}) {
    INFO(a);
    const auto fast = optimize_r(a);
    const auto slow = optimize_r_exhaustive(a);
    CHECK(fast.r == slow.r);
    CHECK(fast.delta_lb == slow.delta_lb);
  }
}

TEST_CASE("delta_lb is non-decreasing over odd a in [3, 201]") {
  double previous = 0.0;
  for (int a = 3; a <= 201; a += 2) {
    const double d = optimize_r(a).delta_lb;
    CHECK(d >= previous);
    previous = d;
  }
}

TEST_CASE("min_a_for_dim") {
  CHECK(min_a_for_dim(0.4) == 3);
  CHECK(min_a_for_dim(1) == 11);
  const long a2 = min_a_for_dim(2);
  CHECK(a2 == 247);
  CHECK(optimize_r(a2).delta_lb >= 2);
  CHECK(optimize_r(a2 - 2).delta_lb < 2);
  CHECK_THROWS_AS(min_a_for_dim(4, 1001), ScanCapExceeded);
  CHECK_THROWS_AS(min_a_for_dim(0), DomainError);
}

TEST_CASE("asymptotic check") {
  CHECK(theorem_slope() == doctest::Approx(0.59061).epsilon(1e-5));
  const std::vector<long> grid{1'000, 10'000, 100'000, 1'000'000, 10'000'000, 100'000'000, 1'000'000'000};
  const auto points = asymptotic_check(grid);
  REQUIRE(points.size() == grid.size());
  for (std::size_t i = 1; i < points.size(); ++i) CHECK(points[i].ratio > points[i - 1].ratio);
  CHECK(points.back().ratio > 0.6);
  CHECK(points[0].ratio == doctest::Approx(0.6265).epsilon(1e-3));
  CHECK_THROWS_AS(asymptotic_check({5, 100}), DomainError);
  CHECK_THROWS_AS(asymptotic_check({100, 50}), DomainError);
}

TEST_CASE("report JSON") {
  const auto j = report_to_json(optimize_r(3));
  CHECK(j.size() == 7);
  CHECK(j["a"] == 3);
  CHECK(j["r"] == 1);
  CHECK(j["delta_lb"].get<double>() == doctest::Approx(0.4572).epsilon(2e-4));
  for (const char* key : {"f", "g", "log_alpha", "log_beta"}) CHECK(j.contains(key));
}

TEST_CASE("empirical rates") {
  const auto third = empirical_rate(geometric(1.0 / 3.0, 10), RateMethod::kRootTest);
  CHECK(third.estimate == doctest::Approx(1.0 / 3.0));
  const auto third_ratio = empirical_rate(geometric(1.0 / 3.0, 10), RateMethod::kRatioTest);
  CHECK(third_ratio.estimate == doctest::Approx(1.0 / 3.0));
  CHECK(third_ratio.spread == doctest::Approx(0.0).epsilon(1e-9));
  std::vector<RatePoint> flat;
  for (int n = 2; n <= 8; n += 2) flat.push_back(RatePoint::from_magnitude(n, 4.0));
  CHECK(empirical_rate(flat, RateMethod::kRatioTest).estimate == doctest::Approx(1.0));
  CHECK(empirical_rate(flat, RateMethod::kRootTest).estimate == doctest::Approx(std::pow(4.0, 1.0 / 8)));
  CHECK_THROWS_AS(RatePoint::from_magnitude(3, 0.0), DomainError);
  CHECK_THROWS_AS(RatePoint::from_magnitude(3, -1.0), DomainError);
  CHECK_THROWS_AS(empirical_rate(geometric(2.0, 2), RateMethod::kRootTest), DomainError);
}
