#pragma once

#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Rising factorial (alpha)_k = alpha (alpha+1) ... (alpha+k-1), (alpha)_0 = 1.
Rational pochhammer(const Rational& alpha, unsigned long k);

/// Integer specialization; avoids rational normalization in hot loops.
BigInt pochhammer(const BigInt& alpha, unsigned long k);

BigInt factorial(unsigned long n);

}  // namespace zetaforms
