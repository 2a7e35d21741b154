#include "zetaforms/reals/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetaforms/errors.hpp"
#include "zetaforms/exact/bernoulli.hpp"
#include "zetaforms/exact/pochhammer.hpp"

namespace zetaforms {

Real zeta_odd(int s, long precision) {
  if (s < 3 || s % 2 == 0) throw DomainError("zeta_odd needs odd s >= 3, got " + std::to_string(s));
  if (precision < 16) throw DomainError("precision below 16 bits");

  const long cutoff = std::max(10L, static_cast<long>(std::ceil(0.4 * static_cast<double>(precision))));
  const mpfr_prec_t work = precision + 32 + static_cast<mpfr_prec_t>(std::log2(cutoff));
  const Real target = exp2_int(-precision - 4, work);

  Real sum(work);
  for (long k = 1; k < cutoff; ++k) sum += pow_int(Real(BigInt(k), work), -s);

  const Real big_n(BigInt(cutoff), work);
  // N^{1-s}/(s-1) + N^{-s}/2
  sum += pow_int(big_n, 1 - s) / Real(BigInt(s - 1), work);
  sum += pow_int(big_n, -s) / Real(BigInt(2), work);

  // Correction terms B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}; stop once the next
  // term is below the target.
  const long max_terms = 4 * cutoff;
  for (long j = 1;; ++j) {
    if (j > max_terms) throw PrecisionUnreachable("zeta_odd: Euler-Maclaurin did not converge");
    const Rational coeff = bernoulli(2 * j) * pochhammer(Rational(s), 2 * j - 1) /
                           Rational(factorial(2 * j));
    const Real term = Real(coeff, work) * pow_int(big_n, -s - 2 * j + 1);
    if (abs(term) < target) break;
    sum += term;
  }

  Real out(precision);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

Real polylog(int i, const Rational& x, long precision) {
  if (i < 1) throw DomainError("polylog order must be >= 1");
  if (x.abs() >= Rational(1)) throw DomainError("polylog needs |x| < 1, got " + x.str());
  if (precision < 16) throw DomainError("precision below 16 bits");

  const mpfr_prec_t work = precision + 32;
  if (x.is_zero()) return Real(1.0, work);

  const double log2_x = std::log2(std::fabs(Real(x, 64).to_double()));
  const double log2_gap = std::log2(1.0 - std::fabs(Real(x, 64).to_double()));
  const double goal = -static_cast<double>(precision) - 4.0;

  const Real xr(x, work);
  Real power(1.0, work);
  Real sum(work);
  for (long k = 0;; ++k) {
    sum += power / pow_int(Real(BigInt(k + 1), work), i);
    power *= xr;
    const long next = k + 1;
    const double tail = static_cast<double>(next) * log2_x -
                        i * std::log2(static_cast<double>(next + 1)) - log2_gap;
    if (tail < goal) break;
  }
  return sum;
}

}  // namespace zetaforms
