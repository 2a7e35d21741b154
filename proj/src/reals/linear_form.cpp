#include "zetaforms/reals/linear_form.hpp"

#include <algorithm>
#include <cmath>

#include "zetaforms/errors.hpp"
#include "zetaforms/exact/lcm_table.hpp"
#include "zetaforms/partial_fractions/partial_fractions.hpp"
#include "zetaforms/reals/series_eval.hpp"
#include "zetaforms/reals/zeta.hpp"

namespace zetaforms {
namespace {

constexpr long kGuardBits = 64;

long bit_length(const BigInt& x) {
  return x == 0 ? 0 : static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

long coefficient_bits(const IntegerLinearForm& form) {
  long bits = bit_length(form.p0);
  for (const auto& x : form.p) bits = std::max(bits, bit_length(x));
  return bits;
}

Real combination(const IntegerLinearForm& form, mpfr_prec_t work) {
  Real value(form.p0, work);
  for (std::size_t i = 0; i < form.p.size(); ++i) {
    value += Real(form.p[i], work) * zeta_odd(static_cast<int>(2 * i + 3), work);
  }
  return value;
}

}  // namespace

bool residual_ok(const Real& residual, long precision_bits) {
  return residual.log2_abs() < -static_cast<double>(precision_bits) / 2.0;
}

IntegerLinearForm build_linear_form(const FormParams& params, long precision) {
  params.validate();
  if (!params.odd_route()) {
    throw DomainError("linear forms need n even and a odd >= 3 (" + params.str() + ")");
  }
  if (precision < 16) throw DomainError("precision below 16 bits");

  const auto table = decompose(params);
  const auto scaled = integer_scaled(table);  // d^{a-i} P_i(1)
  const BigInt& d = lcm_upto(static_cast<std::size_t>(params.n));

  IntegerLinearForm form;
  form.params = params;
  form.p0 = scaled[0];
  for (int i = 3; i <= params.a; i += 2) {
    BigInt dp;
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(i));
    form.p.push_back(scaled[static_cast<std::size_t>(i)] * dp);
  }
  BigInt d_pow_a;
  mpz_pow_ui(d_pow_a.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(params.a));
  const long bits = std::max(coefficient_bits(form), bit_length(d_pow_a));

  auto attempt = [&](long target) {
    const mpfr_prec_t work = target + bits + kGuardBits;
    form.ell = Real(d_pow_a, work) * eval_S(params, Rational(1), work);
    form.residual = abs(form.ell - combination(form, work));
    form.precision_bits = target;
    return residual_ok(form.residual, target);
  };

  if (attempt(precision) || attempt(2 * precision)) return form;
  throw ResidualFailure("linear form residual " + form.residual.to_string(6) +
                        " above threshold for " + params.str());
}

Real recheck_residual(const IntegerLinearForm& form) {
  const long work = form.ell.precision();
  return abs(form.ell - combination(form, work));
}

Real verify_identity_at_z(const FormParams& params, const Rational& z, long precision) {
  params.validate();
  if (z <= Rational(1)) throw DomainError("identity check needs z > 1, got " + z.str());

  const auto table = decompose(params);
  std::vector<Rational> polys;
  polys.reserve(params.a + 1);
  polys.push_back(p0_eval(table, z));
  for (int i = 1; i <= params.a; ++i) polys.push_back(p_poly_eval(table, i, z));
  double magnitude = 0.0;
  for (const auto& q : polys) {
    if (!q.is_zero()) magnitude = std::max(magnitude, Real(q, 64).log2_abs());
  }
  const auto work = static_cast<long>(precision + kGuardBits + std::ceil(magnitude));

  const Rational inv_z = Rational(1) / z;
  Real value = Real(polys[0], work);
  for (int i = 1; i <= params.a; ++i) {
    if (polys[i].is_zero()) continue;
    value += Real(polys[i], work) * polylog(i, inv_z, work);
  }
  return abs(eval_S(params, z, work) - value);
}

nlohmann::json form_to_json(const IntegerLinearForm& form) {
  nlohmann::json p = nlohmann::json::array();
  for (const auto& x : form.p) p.push_back(x.get_str());
  // Enough significant digits for an absolute accuracy of 2^{-precision_bits}.
  const double magnitude = std::max(form.ell.log2_abs(), 0.0);
  const int digits =
      static_cast<int>(std::ceil((magnitude + static_cast<double>(form.precision_bits)) * 0.30103)) + 8;
  return {{"a", form.params.a},
          {"r", form.params.r},
          {"n", form.params.n},
          {"p0", form.p0.get_str()},
          {"p", std::move(p)},
          {"ell", form.ell.to_string(digits)},
          {"residual", form.residual.to_string(6)},
          {"precision_bits", form.precision_bits}};
}

IntegerLinearForm form_from_json(const nlohmann::json& j) {
  try {
    IntegerLinearForm form;
    form.params = FormParams::make(j.at("a").get<int>(), j.at("r").get<int>(), j.at("n").get<int>());
    form.precision_bits = j.at("precision_bits").get<long>();
    form.p0 = BigInt(j.at("p0").get<std::string>());
    for (const auto& x : j.at("p")) form.p.emplace_back(x.get<std::string>());
    const long work = form.precision_bits + coefficient_bits(form) + kGuardBits;
    form.ell = Real(j.at("ell").get<std::string>(), work);
    form.residual = Real(j.at("residual").get<std::string>(), 64);
    return form;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed form JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("malformed form JSON: ") + e.what());
  }
}

}  // namespace zetaforms
