#pragma once

#include "zetaforms/exact/rational.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"
#include "zetaforms/reals/real.hpp"

namespace zetaforms {

/// S_n(z) = sum_{k>=rn} R_n(k) z^{-k} for rational z >= 1, absolute error
/// below 2^{-precision}.  The result carries at least `precision` bits.
///
/// For z > 1 the terms are summed until the geometric tail bound certifies
/// the target.  At z = 1 the decay is only polynomial, so the sum is split
/// into a head up to N and an Euler-Maclaurin tail with a certified remainder.
/// Throws PrecisionUnreachable if the tail cannot be certified within the
/// iteration cap, DomainError for z < 1.
Real eval_S(const FormParams& params, const Rational& z, long precision);

}  // namespace zetaforms
