#pragma once

#include <cstddef>

#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Bernoulli number B_n (convention B_1 = -1/2), memoized and thread-safe.
Rational bernoulli(std::size_t n);

}  // namespace zetaforms
