#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Power series c_0 + c_1 e + ... + c_{K-1} e^{K-1} with exact coefficients,
/// truncated at a fixed order K >= 1.  All ring operations truncate at K.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  /// The linear polynomial m + e.
  static TruncatedSeries linear(std::size_t order, const Rational& m);

  [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

  /// In-place multiplication by (m + e); O(K).
  TruncatedSeries& mul_linear(const Rational& m);
  TruncatedSeries& scale(const Rational& c);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inverse(const TruncatedSeries& s);
TruncatedSeries series_pow(const TruncatedSeries& s, unsigned long e);

}  // namespace zetaforms
