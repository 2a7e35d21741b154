#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <mpfr.h>

#include <cmath>
#include <string>

#include "zetaforms/errors.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"
#include "zetaforms/reals/linear_form.hpp"
#include "zetaforms/reals/mc_integral.hpp"
#include "zetaforms/reals/real.hpp"
#include "zetaforms/reals/series_eval.hpp"
#include "zetaforms/reals/zeta.hpp"

using namespace zetaforms;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// log2 |x - y|, -inf when equal.
double log2_diff(const Real& x, const Real& y) { return (x - y).log2_abs(); }

Real mpfr_zeta(unsigned long s, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
  return out;
}

/// Sum of k^{-s} for k = 1..N in long double, smallest terms first, plus the
/// midpoint of the integral tail bracket [1/((s-1)(N+1)^{s-1}), 1/((s-1)N^{s-1})].
long double raw_zeta(int s, long terms) {
  long double sum = 0.0L;
  for (long k = terms; k >= 1; --k) sum += 1.0L / std::pow(static_cast<long double>(k), s);
  const long double lo = 1.0L / ((s - 1) * std::pow(static_cast<long double>(terms + 1), s - 1));
  const long double hi = 1.0L / ((s - 1) * std::pow(static_cast<long double>(terms), s - 1));
  return sum + (lo + hi) / 2.0L;
}

}  // namespace

TEST_CASE("real basics") {
  const Real x(q(1, 3), 128);
  CHECK(x.precision() == 128);
  CHECK((x * Real(3.0, 128)).to_double() == doctest::Approx(1.0));
  CHECK(Real(std::string("1.5e0"), 64).to_double() == 1.5);
  CHECK_THROWS_AS(Real(std::string("one"), 64), DomainError);
  CHECK_THROWS_AS(Real(1.0, 64) / Real(0.0, 64), DivisionByZero);
  CHECK((Real(1.0, 64) + Real(1.0, 200)).precision() == 200);
  CHECK(exp2_int(-10, 64).log2_abs() == doctest::Approx(-10.0));
  CHECK(pow_int(Real(2.0, 64), -3).to_double() == 0.125);
  CHECK(Real(BigInt("123456789012345678901234567890"), 128).to_string(5) == "1.2346e+29");
}

TEST_CASE("zeta_odd against mpfr") {
  for (int s : {3, 5, 7, 9, 11, 21}) {
    for (long prec : {64L, 256L, 1024L}) {
      const Real value = zeta_odd(s, prec);
      CHECK(value.precision() >= prec);
      CHECK(log2_diff(value, mpfr_zeta(static_cast<unsigned long>(s), prec + 64)) < -(prec - 2));
    }
  }
}

TEST_CASE("zeta_odd against raw summation with an integral tail") {
  const long double z3 = raw_zeta(3, 1'000'000);
  const long double z5 = raw_zeta(5, 1'000'000);
  CHECK(std::fabs(zeta_odd(3, 256).to_double() - static_cast<double>(z3)) < 1e-12);
  CHECK(std::fabs(zeta_odd(5, 256).to_double() - static_cast<double>(z5)) < 1e-12);
  CHECK(zeta_odd(3, 256).to_string(20) == "1.2020569031595942854e+00");
  CHECK(zeta_odd(5, 256).to_string(17) == "1.0369277551433699e+00");
}

TEST_CASE("zeta_odd errors") {
  CHECK_THROWS_AS(zeta_odd(4, 128), DomainError);
  CHECK_THROWS_AS(zeta_odd(1, 128), DomainError);
  CHECK_THROWS_AS(zeta_odd(3, 8), DomainError);
}

TEST_CASE("polylog") {
  const long prec = 200;
  Real two_log2 = log(Real(2.0, prec + 32)) * Real(2.0, prec + 32);
  CHECK(log2_diff(polylog(1, q(1, 2), prec), two_log2) < -(prec - 2));
  CHECK(polylog(1, q(1, 2), 64).to_string(11) == "1.3862943611e+00");
  CHECK(polylog(4, q(0), 64).to_double() == 1.0);
  // L_1(x) = -log(1-x)/x also for negative x
  const Real x(q(-2, 3), prec + 32);
  const Real closed = -log(Real(1.0, prec + 32) - x) / x;
  CHECK(log2_diff(polylog(1, q(-2, 3), prec), closed) < -(prec - 2));
  CHECK_THROWS_AS(polylog(2, q(1), 64), DomainError);
  CHECK_THROWS_AS(polylog(2, q(-3, 2), 64), DomainError);
  CHECK_THROWS_AS(polylog(0, q(1, 2), 64), DomainError);
}

TEST_CASE("eval_S trivial cases") {
  const auto p0 = FormParams::make(3, 1, 0);
  CHECK(log2_diff(eval_S(p0, 1, 256), mpfr_zeta(3, 320)) < -255);
  CHECK(log2_diff(eval_S(p0, 2, 256), polylog(3, q(1, 2), 300)) < -255);
  CHECK(log2_diff(eval_S(FormParams::make(5, 1, 0), 1, 200), mpfr_zeta(5, 260)) < -199);
}

TEST_CASE("eval_S against frozen high-precision values") {
  // Reference digits from an independent 400-digit summation.
  struct Case {
    FormParams p;
    const char* expected;
  };
  const Case cases[] = {
      {FormParams::make(3, 1, 2), "1.585810424342876015710309313000554100822e-03"},
      {FormParams::make(5, 1, 2), "9.936677406099740672847596777615277563732e-07"},
      {FormParams::make(5, 2, 2), "2.473197489750670471759039598432444636807e-06"},
      {FormParams::make(3, 1, 1), "2.907693587517011061381233304435264906530e-02"},
  };
  for (const auto& c : cases) {
    INFO(c.p.str());
    const Real value = eval_S(c.p, 1, 160);
    const Real expected(std::string(c.expected), 200);
    CHECK(log2_diff(value, expected) < (expected.log2_abs() - 130));
  }
  CHECK(eval_S(FormParams::make(3, 1, 2), 2, 64).to_double() > 0.0);
}

TEST_CASE("S_n(1) is positive and shrinks") {
  const auto zeta3 = eval_S(FormParams::make(3, 1, 0), 1, 128);
  Real previous = zeta3;
  for (int n = 2; n <= 20; n += 2) {
    const Real value = eval_S(FormParams::make(3, 1, n), 1, 128 + 4 * n);
    CHECK(value.sign() > 0);
    CHECK(value < previous);
    previous = value;
  }
}

TEST_CASE("raising precision agrees with the lower-precision value") {
  for (const auto& p : {FormParams::make(3, 1, 4), FormParams::make(7, 2, 2)}) {
    const Real lo = eval_S(p, 1, 128);
    const Real hi = eval_S(p, 1, 512);
    CHECK(log2_diff(lo, hi) < -127);
    const Real lo_z = eval_S(p, q(3, 2), 128);
    const Real hi_z = eval_S(p, q(3, 2), 512);
    CHECK(log2_diff(lo_z, hi_z) < -127);
  }
}

TEST_CASE("eval_S errors") {
  CHECK_THROWS_AS(eval_S(FormParams::make(3, 1, 1), q(1, 2), 64), DomainError);
  CHECK_THROWS_AS(eval_S(FormParams::make(3, 1, 0), 1, 1'000'000'000), PrecisionUnreachable);
}

TEST_CASE("linear form examples") {
  const auto f0 = build_linear_form(FormParams::make(3, 1, 0), 128);
  CHECK(f0.p0 == 0);
  CHECK(f0.p == std::vector<BigInt>{1});
  CHECK(log2_diff(f0.ell, mpfr_zeta(3, 200)) < -127);
  CHECK(residual_ok(f0.residual, 128));

  const auto f2 = build_linear_form(FormParams::make(3, 1, 2), 128);
  CHECK(f2.p0 == 577);
  CHECK(f2.p == std::vector<BigInt>{-480});
  CHECK(f2.residual.log2_abs() < -100);  // below 10^-30

  const auto f5 = build_linear_form(FormParams::make(5, 1, 2), 128);
  CHECK(f5.p.size() == 2);
  CHECK(residual_ok(f5.residual, 128));

  CHECK_THROWS_AS(build_linear_form(FormParams::make(3, 1, 1), 128), DomainError);
  CHECK_THROWS_AS(build_linear_form(FormParams::make(6, 1, 2), 128), DomainError);
}

TEST_CASE("linear form residuals over a in {3,5,7}, valid r, even n <= 12") {
  for (int a : {3, 5, 7}) {
    for (int r = 1; 2 * r < a; ++r) {
      for (int n = 0; n <= 12; n += 2) {
        const auto p = FormParams::make(a, r, n);
        INFO(p.str());
        const auto form = build_linear_form(p, 256);
        CHECK(residual_ok(form.residual, 256));
        CHECK(form.ell.sign() > 0);
        CHECK(recheck_residual(form).log2_abs() < -128);
      }
    }
  }
}

TEST_CASE("form JSON round trip reproduces the residual verdict") {
  const auto form = build_linear_form(FormParams::make(5, 1, 4), 256);
  const auto j = form_to_json(form);
  CHECK(j["a"] == 5);
  CHECK(j["n"] == 4);
  CHECK(j["p0"].is_string());
  CHECK(j["ell"].is_string());
  const auto back = form_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.p0 == form.p0);
  CHECK(back.p == form.p);
  CHECK(residual_ok(recheck_residual(back), back.precision_bits));

  auto tampered = j;
  tampered["p0"] = BigInt(form.p0 + 1).get_str();
  CHECK_FALSE(residual_ok(recheck_residual(form_from_json(tampered)), form.precision_bits));

  auto broken = j;
  broken.erase("p");
  CHECK_THROWS_AS(form_from_json(broken), DomainError);
}

TEST_CASE("identity at z > 1") {
  const long prec = 200;
  for (const auto& p : {FormParams::make(3, 1, 0), FormParams::make(3, 1, 1), FormParams::make(3, 1, 2),
                        FormParams::make(5, 2, 2), FormParams::make(6, 2, 3)}) {
    for (const Rational& z : {q(2), q(3, 2), q(5)}) {
      INFO(p.str(), " z=", z.str());
      CHECK(verify_identity_at_z(p, z, prec).log2_abs() < -(prec - 8));
    }
  }
  CHECK_THROWS_AS(verify_identity_at_z(FormParams::make(3, 1, 0), 1, 64), DomainError);
}

TEST_CASE("counter uniforms") {
  for (std::uint64_t c = 0; c < 100'000; ++c) {
    const double u = counter_uniform(3, c);
    CHECK((u > 0.0 && u < 1.0));
  }
  CHECK(counter_uniform(1, 5) == counter_uniform(1, 5));
  CHECK(counter_uniform(1, 5) != counter_uniform(2, 5));
}

TEST_CASE("monte carlo n = 0 targets zeta(3) and L_3(1/2)") {
  const auto p = FormParams::make(3, 1, 0);
  const auto at1 = mc_integral(p, 1, 1'000'000, 7);
  CHECK(at1.samples == 1'000'000);
  CHECK(std::fabs(at1.estimate - 1.2020569031595942) <= 3 * at1.standard_error);
  const auto at2 = mc_integral(p, 2, 200'000, 11);
  CHECK(std::fabs(at2.estimate - polylog(3, q(1, 2), 64).to_double()) <= 3 * at2.standard_error);
  CHECK_THROWS_AS(mc_integral(p, 1, 9'999, 1), DomainError);
  CHECK_THROWS_AS(mc_integral(p, q(1, 2), 10'000, 1), DomainError);
}

TEST_CASE("monte carlo is deterministic") {
  const auto p = FormParams::make(3, 1, 2);
  const auto x = mc_integral(p, 1, 100'000, 42);
  const auto y = mc_integral(p, 1, 100'000, 42);
  CHECK(x.estimate == y.estimate);
  CHECK(x.standard_error == y.standard_error);
}

TEST_CASE("monte carlo seed battery") {
  // At 3 standard errors about 0.3% of honest runs miss; allow one miss in 20.
  const auto p = FormParams::make(3, 1, 2);
  const double series = eval_S(p, 1, 64).to_double();
  int misses = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto est = mc_integral(p, 1, 200'000, seed);
    if (std::fabs(est.estimate - series) > 3 * est.standard_error) ++misses;
  }
  CHECK(misses <= 1);
}
