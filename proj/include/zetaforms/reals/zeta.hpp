#pragma once

#include "zetaforms/exact/rational.hpp"
#include "zetaforms/reals/real.hpp"

namespace zetaforms {

/// zeta(s) for odd s >= 3 with absolute error below 2^{-precision+2}.
///
/// Direct summation up to N ~ 0.4 * precision followed by an Euler-Maclaurin
/// correction with exact Bernoulli coefficients.  Since t^{-s} is completely
/// monotone the remainder is bounded by the first omitted correction term,
/// which is used as the stopping rule.  Precisions below 16 bits are rejected.
Real zeta_odd(int s, long precision);

/// L_i(x) = sum_{k>=0} x^k/(k+1)^i for |x| < 1, absolute error below
/// 2^{-precision+2}.  The geometric tail bound |x|^K/((K+1)^i (1-|x|)) decides
/// where to stop.
Real polylog(int i, const Rational& x, long precision);

}  // namespace zetaforms
