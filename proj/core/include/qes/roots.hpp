#pragma once

#include "qes/polynomial.hpp"

#include <vector>

namespace qes {

// Sturm sequence of a nonzero polynomial: p, p', then each entry the
// negated remainder of the two preceding, stopping before the zero
// remainder. Exact rational arithmetic throughout; no pseudo-remainders.
class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& p);

  const std::vector<RationalPoly>& entries() const { return chain_; }

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  // Distinct real roots of p in the half-open interval (a, b].
  // Requires a < b and p nonzero at both endpoints.
  int count_roots_between(const Rational& a, const Rational& b) const;

  int count_distinct_real_roots() const;

 private:
  std::vector<RationalPoly> chain_;
};

// Strict upper bound on the magnitude of every real root:
// 1 + max|a_i| / |a_n|. Requires degree >= 1.
Rational cauchy_root_bound(const RationalPoly& p);

// Open interval (lo, hi) containing exactly one distinct real root of the
// polynomial it was isolated from; sign_lo/sign_hi are the exact signs of
// that polynomial at the endpoints (never zero).
struct RootBracket {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
};

struct IsolatedRoot {
  RootBracket bracket;
  int multiplicity = 1;
};

// All distinct real roots, each in its own bracket, ascending and pairwise
// disjoint. Multiplicities are exact (computed from the gcd tower
// g_1 = gcd(p, p'), g_{j+1} = gcd(g_j, g_j')). Zero polynomial throws;
// constants isolate to nothing.
std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p);

// Bisection refinement of a bracketed root to |error| < 10^(-digits).
// The bracket must contain exactly one distinct root of p (verified).
// Midpoints that hit the root exactly are returned exactly.
Rational refine_root(const RationalPoly& p, const RootBracket& bracket, int digits);

struct RefinedRoot {
  Rational value;
  RootBracket bracket;  // final bracket around the root (unchanged on an exact hit)
  bool exact = false;   // value is the root, as a rational
};

// As refine_root, with the final bracket exposed. value_cap, when nonzero,
// keeps bisecting until |p(value)| <= value_cap as well (must be reachable,
// i.e. the bracketed root drives |p| under the cap; any positive cap works).
RefinedRoot refine_root_detailed(const RationalPoly& p, const RootBracket& bracket,
                                 int digits, const Rational& value_cap = Rational(0));

}  // namespace qes
