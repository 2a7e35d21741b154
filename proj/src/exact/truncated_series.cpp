#include "zetaforms/exact/truncated_series.hpp"

#include <string>

#include "zetaforms/errors.hpp"

namespace zetaforms {
namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw DomainError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw DomainError("series order must be at least 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series order must be at least 1");
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::linear(std::size_t order, const Rational& m) {
  TruncatedSeries s(order);
  s.coeffs_[0] = m;
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::mul_linear(const Rational& m) {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    coeffs_[k] *= m;
    if (k > 0) coeffs_[k] += coeffs_[k - 1];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::scale(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> out(a.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s[0].is_zero()) throw NotInvertible("series with zero constant term is not invertible");
  const std::size_t order = s.order();
  const Rational inv0 = Rational(1) / s[0];
  std::vector<Rational> out(order);
  out[0] = inv0;
  for (std::size_t k = 1; k < order; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      if (!s[i].is_zero()) acc += s[i] * out[k - i];
    }
    out[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& s, unsigned long e) {
  TruncatedSeries result = TruncatedSeries::constant(s.order(), 1);
  TruncatedSeries base = s;
  while (e > 0) {
    if (e & 1UL) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

}  // namespace zetaforms
