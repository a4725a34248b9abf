#include "qes/rational.hpp"

#include <stdexcept>

namespace qes {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow10(int k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  Rational q;
  if (k < 0) {
    q = Rational(Integer(1), p);
  } else {
    q = Rational(p, Integer(1));
  }
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  Integer num = q.get_num();
  const Integer& den = q.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;

  // round(|q| * scale) half away from zero: floor((2*num*scale + den) / (2*den))
  Integer r = (2 * num * scale + den) / (2 * den);

  Integer ip = r / scale;
  Integer fp = r % scale;

  std::string out;
  if (negative && r != 0) out += '-';
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace qes
