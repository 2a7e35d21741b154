#include "zetaforms/reals/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaforms/errors.hpp"

namespace zetaforms {

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw DomainError("malformed decimal '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

double Real::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, v_, MPFR_RNDN);
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

std::string Real::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(digits - 1, 0), v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string Real::to_string() const {
  return to_string(static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1);
}

namespace {

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(joint(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DivisionByZero();
  Real out(joint(a, b));
  mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator-(const Real& a) {
  Real out(a.precision());
  mpfr_neg(out.get(), a.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp2_int(long e, mpfr_prec_t precision) {
  Real out(precision);
  mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
  return out;
}

Real pow_int(const Real& x, long e) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

}  // namespace zetaforms
