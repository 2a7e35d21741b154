#pragma once

#include <vector>

#include "json.hpp"
#include "zetaforms/exact/rational.hpp"
#include "zetaforms/partial_fractions/form_params.hpp"
#include "zetaforms/reals/real.hpp"

namespace zetaforms {

/// ell = d_n^a S_n(1) = p0 + sum_i p[i-1] zeta(2i+1), with its residual.
struct IntegerLinearForm {
  FormParams params;
  BigInt p0;
  std::vector<BigInt> p;  // coefficient of zeta(3), zeta(5), ..., zeta(a)
  Real ell{64};
  Real residual{64};
  long precision_bits = 0;
};

/// Builds the integer linear form for even n and odd a >= 3.
///
/// `precision` is the target absolute accuracy in bits; guard bits covering
/// the size of the integer coefficients are added internally.  If the
/// residual is not below 2^{-precision/2} the target is doubled once; a second
/// failure throws ResidualFailure.
IntegerLinearForm build_linear_form(const FormParams& params, long precision);

/// |ell - p0 - sum p_i zeta(2i+1)| recomputed from the stored integers and ell.
Real recheck_residual(const IntegerLinearForm& form);

/// True iff residual < 2^{-precision_bits/2}.
bool residual_ok(const Real& residual, long precision_bits);

/// |S_n(z) - P_0(z) - sum_{i=1..a} P_i(z) L_i(1/z)| for rational z > 1.
Real verify_identity_at_z(const FormParams& params, const Rational& z, long precision);

/// {"a","r","n","p0","p":[…],"ell","residual","precision_bits"}; integers and
/// reals as decimal strings.
nlohmann::json form_to_json(const IntegerLinearForm& form);
IntegerLinearForm form_from_json(const nlohmann::json& j);

}  // namespace zetaforms
