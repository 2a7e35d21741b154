#include "zetaforms/reals/series_eval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "zetaforms/errors.hpp"
#include "zetaforms/exact/bernoulli.hpp"
#include "zetaforms/exact/pochhammer.hpp"
#include "zetaforms/partial_fractions/partial_fractions.hpp"

namespace zetaforms {
namespace {

constexpr long kMaxTerms = 5'000'000;

/// R_n(t) = lead * prod (t + c)^{mult} over numerator and denominator shifts
/// (denominator multiplicities negative).
struct LinearFactors {
  BigInt lead;
  std::vector<std::pair<long, long>> shifts;  // (c, multiplicity)
  long count = 0;                             // total number of linear factors
  long max_shift = 0;                         // max |c|

  explicit LinearFactors(const FormParams& p) {
    lead = 1;
    mpz_pow_ui(lead.get_mpz_t(), factorial(p.n).get_mpz_t(), p.a - 2 * p.r);
    const long rn = static_cast<long>(p.r) * p.n;
    for (long i = 0; i < rn; ++i) shifts.emplace_back(-rn + 1 + i, 1);
    for (long i = 0; i < rn; ++i) shifts.emplace_back(p.n + 2 + i, 1);
    for (long l = 1; l <= p.n + 1; ++l) shifts.emplace_back(l, -p.a);
    for (const auto& [c, m] : shifts) {
      count += std::abs(m);
      max_shift = std::max(max_shift, std::abs(c));
    }
  }
};

double log2_lead(const FormParams& p) {
  return static_cast<double>(p.a - 2 * p.r) * std::lgamma(p.n + 1.0) / std::numbers::ln2;
}

/// R_n(k+1)/R_n(k) as an exact fraction; k >= rn.
std::pair<BigInt, BigInt> term_ratio(const FormParams& p, long k) {
  const long rn = static_cast<long>(p.r) * p.n;
  BigInt num = k + 1;
  BigInt den = k - rn + 1;
  num *= k + p.n + 2 + rn;
  den *= k + p.n + 2;
  BigInt up;
  BigInt down;
  mpz_ui_pow_ui(up.get_mpz_t(), static_cast<unsigned long>(k + 1), p.a);
  mpz_ui_pow_ui(down.get_mpz_t(), static_cast<unsigned long>(k + p.n + 2), p.a);
  return {num * up, den * down};
}

void mul_fraction(Real& x, const BigInt& num, const BigInt& den) {
  mpfr_mul_z(x.get(), x.get(), num.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(x.get(), x.get(), den.get_mpz_t(), MPFR_RNDN);
}

/// Coefficients of exp(sum_{m>=1} log_coeffs[m] u^m) up to degree log_coeffs.size()-1.
std::vector<Real> exp_series(const std::vector<Real>& log_coeffs, mpfr_prec_t work) {
  const std::size_t order = log_coeffs.size();
  std::vector<Real> out(order, Real(work));
  out[0] = Real(1.0, work);
  std::vector<Real> weighted;  // k * log_coeffs[k]
  weighted.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    weighted.push_back(log_coeffs[k] * Real(BigInt(static_cast<unsigned long>(k)), work));
  }
  Real acc(work);
  Real product(work);
  for (std::size_t m = 1; m < order; ++m) {
    mpfr_set_zero(acc.get(), 1);
    for (std::size_t k = 1; k <= m; ++k) {
      mpfr_mul(product.get(), weighted[k].get(), out[m - k].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), product.get(), MPFR_RNDN);
    }
    mpfr_div_ui(out[m].get(), acc.get(), m, MPFR_RNDN);
  }
  return out;
}

struct TailPlan {
  long cutoff = 0;          // N
  long corrections = 0;     // p
  long laurent_terms = 0;   // highest power of 1/t kept in the integral
};

/// log2 of the Euler-Maclaurin remainder bound
///   2 zeta(2p) (2p)! K N^{1-D-2p} / (pi^{2p} (D+2p-1)),  K = lead 2^{#factors},
/// obtained from Cauchy estimates on discs of radius t/2 (valid for N >= 2 max|c|).
double em_remainder_log2(double log2_k, long decay, long cutoff, long p) {
  const double two_p = 2.0 * static_cast<double>(p);
  constexpr double kZeta2 = 1.6450;  // zeta(2p) <= zeta(2)
  return 1.0 + std::log2(kZeta2) + std::lgamma(two_p + 1.0) / std::numbers::ln2 + log2_k +
         (1.0 - static_cast<double>(decay) - two_p) * std::log2(static_cast<double>(cutoff)) -
         two_p * std::log2(std::numbers::pi) -
         std::log2(static_cast<double>(decay) + two_p - 1.0);
}

TailPlan plan_tail(const FormParams& p, const LinearFactors& factors, double goal_log2) {
  const long decay = p.decay_order();
  const long radius = 2 * std::max(factors.max_shift, 1L);  // T
  const double log2_lead_value = log2_lead(p);
  const double log2_k = log2_lead_value + static_cast<double>(factors.count);

  for (long cutoff = std::max(8 * radius, 64L); cutoff < kMaxTerms; cutoff *= 2) {
    double best = HUGE_VAL;
    for (long corrections = 1; corrections < 4 * cutoff; ++corrections) {
      const double bound = em_remainder_log2(log2_k, decay, cutoff, corrections);
      if (bound < goal_log2) {
        // Laurent truncation: M_T N (T/N)^{M+1} / (1 - T/N) with
        // M_T = lead (1.5 T)^{2rn} (T/2)^{-a(n+1)}.
        const double t = static_cast<double>(radius);
        const double big_n = static_cast<double>(cutoff);
        const long rn2 = 2L * p.r * p.n;
        const long den_count = static_cast<long>(p.a) * (p.n + 1);
        const double log2_mt = log2_lead_value + static_cast<double>(rn2) * std::log2(1.5 * t) -
                               static_cast<double>(den_count) * std::log2(t / 2.0);
        const double step = std::log2(big_n / t);
        const double fixed = log2_mt + std::log2(big_n) - std::log2(1.0 - t / big_n);
        long terms = decay;
        while (fixed - step * static_cast<double>(terms + 1) >= goal_log2) ++terms;
        return TailPlan{cutoff, corrections, terms};
      }
      if (bound > best + 8.0) break;  // past the minimum
      best = std::min(best, bound);
    }
  }
  throw PrecisionUnreachable("eval_S: Euler-Maclaurin tail cannot be certified for " + p.str());
}

/// int_N^inf R_n(t) dt from the 1/t expansion R_n(t) = lead sum_m h_{m-D} t^{-m}.
Real laurent_integral(const FormParams& p, const LinearFactors& factors, const TailPlan& plan,
                      mpfr_prec_t work) {
  const long decay = p.decay_order();
  const long order = plan.laurent_terms - decay + 1;
  // log of prod (1 + c u)^{mult}: coefficient of u^m is (-1)^{m+1}/m sum mult c^m.
  std::vector<Real> log_coeffs(static_cast<std::size_t>(order), Real(work));
  std::vector<BigInt> powers(factors.shifts.size(), BigInt(1));
  for (long m = 1; m < order; ++m) {
    BigInt power_sum = 0;
    for (std::size_t f = 0; f < factors.shifts.size(); ++f) {
      powers[f] *= factors.shifts[f].first;
      power_sum += powers[f] * factors.shifts[f].second;
    }
    if (m % 2 == 0) power_sum = -power_sum;
    log_coeffs[m] = Real(Rational(power_sum, BigInt(m)), work);
  }
  const std::vector<Real> h = exp_series(log_coeffs, work);

  const Real big_n(BigInt(plan.cutoff), work);
  const Real inv_n = Real(1.0, work) / big_n;
  Real power = pow_int(big_n, 1 - decay);  // N^{1-m} for m = decay
  Real sum(work);
  for (long q = 0; q < order; ++q) {
    const long m = q + decay;
    Real term = h[q] * power;
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(m - 1), MPFR_RNDN);
    sum += term;
    power *= inv_n;
  }
  mpfr_mul_z(sum.get(), sum.get(), factors.lead.get_mpz_t(), MPFR_RNDN);
  return sum;
}

/// tau_k = R_n^{(k)}(N)/k! for k < order, given value = R_n(N).
std::vector<Real> taylor_at(const LinearFactors& factors, long cutoff, const Real& value,
                            long order, mpfr_prec_t work) {
  std::vector<Real> log_coeffs(static_cast<std::size_t>(order), Real(work));
  for (const auto& [c, mult] : factors.shifts) {
    const Real inv = Real(1.0, work) / Real(BigInt(cutoff + c), work);
    Real power = inv;
    for (long m = 1; m < order; ++m) {
      // (-1)^{m+1}/m * mult * (N+c)^{-m}
      Real term = power * Real(BigInt(mult), work);
      mpfr_div_si(term.get(), term.get(), (m % 2 == 1) ? m : -m, MPFR_RNDN);
      log_coeffs[m] += term;
      power *= inv;
    }
  }
  std::vector<Real> out = exp_series(log_coeffs, work);
  for (auto& x : out) x *= value;
  return out;
}

}  // namespace

Real eval_S(const FormParams& params, const Rational& z, long precision) {
  params.validate();
  if (z < Rational(1)) throw DomainError("eval_S needs z >= 1, got " + z.str());
  if (params.decay_order() < 2) {
    throw InvariantViolation("S_n(1) diverges: a(n+1) - 2rn < 2 for " + params.str());
  }

  const LinearFactors factors(params);
  const long rn = static_cast<long>(params.r) * params.n;
  const bool at_one = z == Rational(1);

  auto attempt = [&](mpfr_prec_t work) {
    const double goal = -static_cast<double>(precision) - 4.0;
    Real term(rn_at(params, Rational(rn)), work);
    Real sum(work);

    if (!at_one) {
      const BigInt zn = z.numerator();
      const BigInt zd = z.denominator();
      const double log2_z = std::log2(Real(z, 64).to_double());
      const double log2_geom = -std::log2(1.0 - std::pow(2.0, -log2_z));
      const double log2_const =
          log2_lead(params) + 2.0 * static_cast<double>(rn) * std::log2(1.5);
      const long min_k = 2 * (factors.max_shift + 1);
      // term holds R(k) z^{-k}
      term *= pow_int(Real(z, work), -rn);
      for (long k = rn;; ++k) {
        if (k - rn > kMaxTerms) {
          throw PrecisionUnreachable("eval_S: geometric tail not certified within " +
                                     std::to_string(kMaxTerms) + " terms");
        }
        sum += term;
        const long next = k + 1;
        if (next >= min_k) {
          const double tail = log2_const -
                              static_cast<double>(params.decay_order()) *
                                  std::log2(static_cast<double>(next)) -
                              static_cast<double>(next) * log2_z + log2_geom;
          if (tail < goal) break;
        }
        const auto [num, den] = term_ratio(params, k);
        mul_fraction(term, num * zd, den * zn);
      }
      return sum;
    }

    const TailPlan plan = plan_tail(params, factors, goal);
    for (long k = rn; k < plan.cutoff; ++k) {
      sum += term;
      const auto [num, den] = term_ratio(params, k);
      mul_fraction(term, num, den);
    }
    // term now holds R_n(N).
    Real tail = laurent_integral(params, factors, plan, work);
    tail += term / Real(BigInt(2), work);
    const std::vector<Real> taylor =
        taylor_at(factors, plan.cutoff, term, 2 * plan.corrections, work);
    for (long j = 1; j <= plan.corrections; ++j) {
      const Rational weight = bernoulli(2 * j) / Rational(2 * j);
      tail -= Real(weight, work) * taylor[2 * j - 1];
    }
    return sum + tail;
  };

  const auto guard = static_cast<mpfr_prec_t>(64 + factors.count / 4);
  mpfr_prec_t work = precision + guard;
  Real result = attempt(work);
  const double magnitude = result.log2_abs();
  if (magnitude > 0.0) {
    const auto needed = precision + guard + static_cast<mpfr_prec_t>(std::ceil(magnitude));
    if (needed > work) result = attempt(needed);
  }
  return result;
}

}  // namespace zetaforms
