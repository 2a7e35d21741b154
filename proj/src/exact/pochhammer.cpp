#include "zetaforms/exact/pochhammer.hpp"

namespace zetaforms {

Rational pochhammer(const Rational& alpha, unsigned long k) {
  // Product of (p + iq)/q keeps the numerator integral until the end.
  const BigInt p = alpha.numerator();
  const BigInt q = alpha.denominator();
  BigInt num = 1;
  BigInt term = p;
  for (unsigned long i = 0; i < k; ++i) {
    num *= term;
    if (num == 0) return Rational(0);
    term += q;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), k);
  return Rational(num, den);
}

BigInt pochhammer(const BigInt& alpha, unsigned long k) {
  BigInt out = 1;
  BigInt term = alpha;
  for (unsigned long i = 0; i < k; ++i) {
    out *= term;
    if (out == 0) break;
    ++term;
  }
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace zetaforms
