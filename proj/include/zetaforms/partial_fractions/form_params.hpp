#pragma once

#include <string>

namespace zetaforms {

/// Parameters (a, r, n) of the series S_n(z).
///
/// a is the zeta height, r the acceleration parameter and n the approximation
/// index; valid triples satisfy 1 <= r, 2r < a and n >= 0.
struct FormParams {
  int a = 3;
  int r = 1;
  int n = 0;

  /// Builds and validates; throws DomainError on a constraint violation.
  static FormParams make(int a, int r, int n);
  void validate() const;

  /// Only odd zeta values survive at z = 1 (n even, a odd, a >= 3).
  [[nodiscard]] bool odd_route() const { return n % 2 == 0 && a % 2 == 1 && a >= 3; }

  /// Degree gap a(n+1) - 2rn between denominator and numerator of R_n.
  [[nodiscard]] long decay_order() const {
    return static_cast<long>(a) * (n + 1) - 2L * r * n;
  }

  [[nodiscard]] std::string str() const;

  friend bool operator==(const FormParams&, const FormParams&) = default;
};

}  // namespace zetaforms
