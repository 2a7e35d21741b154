#include "zetaforms/partial_fractions/partial_fractions.hpp"

#include <algorithm>
#include <execution>
#include <numeric>
#include <random>

#include "zetaforms/errors.hpp"
#include "zetaforms/exact/lcm_table.hpp"
#include "zetaforms/exact/pochhammer.hpp"
#include "zetaforms/exact/truncated_series.hpp"

namespace zetaforms {
namespace {

int sign_power(long e) { return e % 2 == 0 ? 1 : -1; }

/// Column j of the table: expansion of R_n(t)(t+j+1)^a at t = -j-1+e.
std::vector<Rational> expand_column(const FormParams& p, int j) {
  const auto order = static_cast<std::size_t>(p.a);
  const long rn = static_cast<long>(p.r) * p.n;

  BigInt lead;
  mpz_pow_ui(lead.get_mpz_t(), factorial(p.n).get_mpz_t(), p.a - 2 * p.r);
  TruncatedSeries num = TruncatedSeries::constant(order, lead);
  for (long i = 0; i < rn; ++i) num.mul_linear(i - j - rn);   // (t - rn + 1 + i)
  for (long i = 0; i < rn; ++i) num.mul_linear(p.n + 1 - j + i);  // (t + n + 2 + i)

  // (t+1)_{n+1} / (t+j+1): every remaining factor is nonzero at e = 0.
  TruncatedSeries den = TruncatedSeries::constant(order, 1);
  for (int l = 0; l <= p.n; ++l) {
    if (l != j) den.mul_linear(l - j);
  }
  const TruncatedSeries expansion =
      series_mul(num, series_inverse(series_pow(den, static_cast<unsigned long>(p.a))));

  std::vector<Rational> column(order);
  for (int i = 1; i <= p.a; ++i) column[i - 1] = expansion[static_cast<std::size_t>(p.a - i)];
  return column;
}

}  // namespace

Rational rn_at(const FormParams& params, const Rational& k) {
  params.validate();
  const long rn = static_cast<long>(params.r) * params.n;
  BigInt lead;
  mpz_pow_ui(lead.get_mpz_t(), factorial(params.n).get_mpz_t(), params.a - 2 * params.r);
  const Rational head = pochhammer(k - Rational(rn - 1), rn);
  if (head.is_zero()) return Rational(0);
  const Rational numerator = Rational(lead) * head * pochhammer(k + Rational(params.n + 2), rn);
  const Rational base = pochhammer(k + Rational(1), params.n + 1);
  if (base.is_zero()) throw DomainError("R_n evaluated at a pole");
  return numerator / pow(base, params.a);
}

PartialFractionTable::PartialFractionTable(FormParams params, std::vector<Rational> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  params_.validate();
  const auto expected = static_cast<std::size_t>(params_.a) * (params_.n + 1);
  if (coeffs_.size() != expected) {
    throw DomainError("table has " + std::to_string(coeffs_.size()) + " coefficients, expected " +
                      std::to_string(expected));
  }
}

std::size_t PartialFractionTable::index(int i, int j) const {
  if (i < 1 || i > params_.a || j < 0 || j > params_.n) {
    throw DomainError("coefficient index (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range");
  }
  return static_cast<std::size_t>(i - 1) * (params_.n + 1) + j;
}

const Rational& PartialFractionTable::c(int i, int j) const { return coeffs_[index(i, j)]; }

PartialFractionTable decompose(const FormParams& params) {
  params.validate();
  const int width = params.n + 1;
  std::vector<std::vector<Rational>> columns(width);
  std::vector<int> js(width);
  std::iota(js.begin(), js.end(), 0);
  std::for_each(std::execution::par, js.begin(), js.end(),
                [&](int j) { columns[j] = expand_column(params, j); });

  std::vector<Rational> coeffs(static_cast<std::size_t>(params.a) * width);
  for (int i = 1; i <= params.a; ++i) {
    for (int j = 0; j < width; ++j) {
      coeffs[static_cast<std::size_t>(i - 1) * width + j] = std::move(columns[j][i - 1]);
    }
  }
  return PartialFractionTable(params, std::move(coeffs));
}

Rational reconstruct_at(const PartialFractionTable& table, const Rational& x) {
  const auto& p = table.params();
  Rational sum;
  for (int j = 0; j <= p.n; ++j) {
    const Rational shifted = x + Rational(j + 1);
    if (shifted.is_zero()) throw DomainError("reconstruction evaluated at a pole");
    const Rational inv = Rational(1) / shifted;
    Rational power = inv;
    for (int i = 1; i <= p.a; ++i) {
      sum += table.c(i, j) * power;
      power *= inv;
    }
  }
  return sum;
}

Rational p_poly_eval(const PartialFractionTable& table, int i, const Rational& z) {
  const auto& p = table.params();
  if (i < 1 || i > p.a) {
    throw DomainError("polynomial index " + std::to_string(i) + " outside 1.." +
                      std::to_string(p.a));
  }
  // Horner in z.
  Rational acc;
  for (int j = p.n; j >= 0; --j) acc = acc * z + table.c(i, j);
  return acc;
}

Rational p0_eval(const PartialFractionTable& table, const Rational& z) {
  const auto& p = table.params();
  Rational total;
  for (int i = 1; i <= p.a; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      const Rational& c = table.c(i, j);
      if (c.is_zero()) continue;
      Rational inner;
      for (int k = 0; k < j; ++k) {
        inner += pow(z, static_cast<unsigned long>(j - k)) / pow(Rational(k + 1), i);
      }
      total += c * inner;
    }
  }
  return -total;
}

bool check_symmetry(const PartialFractionTable& table) {
  const auto& p = table.params();
  const int parity_an = sign_power(static_cast<long>(p.a) * p.n);
  for (int i = 1; i <= p.a; ++i) {
    const Rational sign(sign_power(p.a - i) * parity_an);
    for (int j = 0; j <= p.n; ++j) {
      if (table.c(i, p.n - j) != sign * table.c(i, j)) return false;
    }
  }
  return true;
}

bool check_reconstruction(const PartialFractionTable& table, std::size_t points,
                          std::uint64_t seed) {
  const auto& p = table.params();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den_dist(1, 1'000'000);
  std::size_t checked = 0;
  while (checked < points) {
    const Rational x(BigInt(num_dist(rng)), BigInt(den_dist(rng)));
    if (x.is_integer() && x <= Rational(-1) && x >= Rational(-(p.n + 1))) continue;
    if (reconstruct_at(table, x) != rn_at(p, x)) return false;
    ++checked;
  }
  return true;
}

std::vector<BigInt> integer_scaled(const PartialFractionTable& table) {
  const auto& p = table.params();
  const BigInt& d = lcm_upto(static_cast<std::size_t>(p.n));
  std::vector<BigInt> out;
  out.reserve(p.a + 1);
  auto push_scaled = [&](const Rational& value, int power, int label) {
    const Rational scaled = value * pow(Rational(d), static_cast<unsigned long>(power));
    if (!scaled.is_integer()) {
      throw InvariantViolation("d_n^" + std::to_string(power) + " * P_" + std::to_string(label) +
                               "(1) is not an integer for " + p.str());
    }
    out.push_back(scaled.numerator());
  };
  push_scaled(p0_eval(table, 1), p.a, 0);
  for (int i = 1; i <= p.a; ++i) push_scaled(p_poly_eval(table, i, 1), p.a - i, i);
  return out;
}

bool coefficients_integral(const PartialFractionTable& table) {
  const auto& p = table.params();
  const Rational d(lcm_upto(static_cast<std::size_t>(p.n)));
  for (int i = 1; i <= p.a; ++i) {
    const Rational scale = pow(d, static_cast<unsigned long>(p.a - i));
    for (int j = 0; j <= p.n; ++j) {
      if (!(table.c(i, j) * scale).is_integer()) return false;
    }
  }
  return true;
}

PartialFractionTable perturbed(const PartialFractionTable& table, int i, int j,
                               const Rational& delta) {
  std::vector<Rational> coeffs = table.flat();
  const auto& p = table.params();
  (void)table.c(i, j);  // range check
  coeffs[static_cast<std::size_t>(i - 1) * (p.n + 1) + j] += delta;
  return PartialFractionTable(p, std::move(coeffs));
}

}  // namespace zetaforms
