#pragma once

#include "qes/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qes {

// Dense univariate polynomial over the rationals.
//
// Canonical form: the zero polynomial is the empty coefficient vector;
// any nonzero polynomial has a nonzero leading coefficient. degree() of
// the zero polynomial is nullopt rather than a sentinel integer.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly variable();
  static RationalPoly from_integers(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;  // zero above the degree
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPoly derivative() const;
  RationalPoly negate_variable() const;  // p(-x)

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b);
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b);

  std::string to_string(char var = 'd') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k
};

struct DivModResult {
  RationalPoly quotient;
  RationalPoly remainder;
};

// Euclidean division; divisor must be nonzero.
DivModResult divmod(const RationalPoly& p, const RationalPoly& q);
RationalPoly remainder(const RationalPoly& p, const RationalPoly& q);

struct ContentSplit {
  Rational content;
  RationalPoly primitive;
};

// p == content * primitive with primitive having coprime integer
// coefficients and a positive leading coefficient. p must be nonzero.
ContentSplit content_split(const RationalPoly& p);

// Monic gcd; poly_gcd(p, 0) is the monic normalization of p.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

// p / gcd(p, p'): same distinct roots as p, all simple.
RationalPoly squarefree_part(const RationalPoly& p);

}  // namespace qes
