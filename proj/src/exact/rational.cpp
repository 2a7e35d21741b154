#include "zetaforms/exact/rational.hpp"

#include "zetaforms/errors.hpp"

namespace zetaforms {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    BigInt out;
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw DomainError("malformed rational literal '" + s + "'");
    }
    return out;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

Rational pow(const Rational& q, unsigned long e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace zetaforms
