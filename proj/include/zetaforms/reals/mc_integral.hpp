#pragma once

#include <cstdint>

#include "zetaforms/exact/rational.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"

namespace zetaforms {

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Plain Monte-Carlo estimate of the unit-cube integral representation
///
///   ((2r+1)n+1)!/n!^{2r+1} z^{(r+1)n+2}
///     * int_{[0,1]^{a+1}} (prod x_i^r (1-x_i) / (z - prod x_i)^{2r+1})^n dx / (z - prod x_i)^2
///
/// of S_n(z), z >= 1.  Uniforms come from a counter-based generator keyed by
/// (seed, sample, coordinate), and blocks are reduced in a fixed order, so the
/// result is independent of thread count.  Requires samples >= 10^4.
McEstimate mc_integral(const FormParams& params, const Rational& z, std::uint64_t samples,
                       std::uint64_t seed);

/// Uniform in (0, 1) for the given (seed, counter); never returns 0 or 1.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

}  // namespace zetaforms
