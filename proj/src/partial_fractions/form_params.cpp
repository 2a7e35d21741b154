#include "zetaforms/partial_fractions/form_params.hpp"

#include "zetaforms/errors.hpp"

namespace zetaforms {

FormParams FormParams::make(int a, int r, int n) {
  FormParams p{a, r, n};
  p.validate();
  return p;
}

void FormParams::validate() const {
  if (r < 1) throw DomainError("r must be >= 1 (" + str() + ")");
  if (2 * r >= a) throw DomainError("need 2r < a (" + str() + ")");
  if (n < 0) throw DomainError("n must be >= 0 (" + str() + ")");
}

std::string FormParams::str() const {
  return "a=" + std::to_string(a) + ", r=" + std::to_string(r) + ", n=" + std::to_string(n);
}

}  // namespace zetaforms
