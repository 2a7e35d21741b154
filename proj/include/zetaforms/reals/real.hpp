#pragma once

#include <mpfr.h>

#include <string>

#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Arbitrary-precision binary floating point number (MPFR, round-to-nearest).
///
/// Every constructor takes the working precision in bits.  Binary operators
/// produce a result at the larger of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t precision);
  Real(double value, mpfr_prec_t precision);
  Real(const BigInt& value, mpfr_prec_t precision);
  Real(const Rational& value, mpfr_prec_t precision);
  /// Parses a decimal string such as "1.2020569e0".
  Real(const std::string& decimal, mpfr_prec_t precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log2 |x|, or -inf for zero.
  [[nodiscard]] double log2_abs() const;
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  /// Scientific decimal representation with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits) const;
  /// Enough digits to represent the value to its own precision.
  [[nodiscard]] std::string to_string() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }

  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  [[nodiscard]] mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
/// 2^e at the given precision.
Real exp2_int(long e, mpfr_prec_t precision);
/// x^e for integer e.
Real pow_int(const Real& x, long e);

}  // namespace zetaforms
