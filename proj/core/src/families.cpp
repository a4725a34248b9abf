#include "qes/families.hpp"

#include <stdexcept>

namespace qes {

namespace {

void validate(const QESProblem& problem) {
  if (problem.N < 0) throw std::invalid_argument("QESProblem: N must be >= 0");
}

}  // namespace

CoefficientTable coefficients_by_recurrence(const QESProblem& problem) {
  validate(problem);
  const int N = problem.N;
  const RationalPoly d = RationalPoly::variable();

  std::vector<RationalPoly> a;
  a.reserve(static_cast<size_t>(N) + 1);
  if (problem.parity == Parity::even) {
    a.push_back(RationalPoly::constant(Rational(1)));  // a_0
    if (N >= 1) a.push_back(-d);                       // a_1
  } else {
    a.push_back(RationalPoly());                       // a_0 = 0
    if (N >= 1) a.push_back(RationalPoly::constant(Rational(1)));  // a_1
  }
  for (int n = 0; n + 2 <= N; ++n) {
    // 2(N-n) a_n + 2d(n+1) a_{n+1} + (n+1)(n+2) a_{n+2} = 0
    RationalPoly t = make_rational(2L * (N - n)) * a[static_cast<size_t>(n)] +
                     make_rational(2L * (n + 1)) * (d * a[static_cast<size_t>(n) + 1]);
    a.push_back(make_rational(-1, static_cast<long>(n + 1) * (n + 2)) * t);
  }
  // The odd seeds fix a_0, a_1 by symmetry; the n = 0 row must then agree
  // on a_2 = -d rather than being imposed.
  if (problem.parity == Parity::odd && N >= 2 && a[2] != -d)
    throw std::logic_error("coefficients_by_recurrence: odd-family a_2 deviates from -d");
  return {problem, std::move(a)};
}

RationalPoly extended_coefficient(const QESProblem& problem) {
  validate(problem);
  const int N = problem.N;
  const RationalPoly d = RationalPoly::variable();
  if (N == 0)
    return problem.parity == Parity::even ? -d : RationalPoly::constant(Rational(1));
  CoefficientTable table = coefficients_by_recurrence(problem);
  // row n = N-1: 2 a_{N-1} + 2dN a_N + N(N+1) a_{N+1} = 0
  RationalPoly t = make_rational(2) * table.a[static_cast<size_t>(N) - 1] +
                   make_rational(2L * N) * (d * table.a[static_cast<size_t>(N)]);
  return make_rational(-1, static_cast<long>(N) * (N + 1)) * t;
}

RationalPoly continuant_determinant(const QESProblem& problem, int k) {
  validate(problem);
  if (k < 0) throw std::out_of_range("continuant_determinant: k must be >= 0");
  const long N = problem.N;
  const RationalPoly d = RationalPoly::variable();
  const bool even = problem.parity == Parity::even;

  RationalPoly prev2 = RationalPoly::constant(Rational(1));        // D_0
  if (k == 0) return prev2;
  RationalPoly prev1 = even ? d : make_rational(2) * d;            // D_1
  for (int j = 2; j <= k; ++j) {
    Rational diag, sub;
    if (even) {
      diag = make_rational(2L * (j - 1));
      // the first superdiagonal entry is 1, not j(j-1), so j = 2 is special
      sub = (j == 2) ? make_rational(2L * N)
                     : make_rational(2L * (N - j + 2) * (j - 1) * (j - 2));
    } else {
      diag = make_rational(2L * j);
      sub = make_rational(2L * (N - j + 1) * (j - 1) * j);
    }
    RationalPoly next = diag * (d * prev1) - sub * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

RationalPoly coefficients_by_determinant(const QESProblem& problem, int k) {
  validate(problem);
  const int N = problem.N;
  const bool even = problem.parity == Parity::even;
  const int k_max = even ? N + 1 : N;
  if (k < 1 || k > k_max)
    throw std::out_of_range("coefficients_by_determinant: k outside the family's range");
  RationalPoly det = continuant_determinant(problem, k);
  const unsigned long ku = static_cast<unsigned long>(k);
  Integer denom = even ? Integer(factorial(ku) * factorial(ku - 1))
                       : Integer(factorial(ku + 1) * factorial(ku));
  Rational scale(k % 2 == 0 ? Integer(1) : Integer(-1), denom);
  scale.canonicalize();
  return scale * det;
}

RationalPoly condition_polynomial(const QESProblem& problem) {
  validate(problem);
  const int size = problem.parity == Parity::even ? problem.N + 1 : problem.N;
  return continuant_determinant(problem, size);
}

ReducedCondition reduced_condition(const QESProblem& problem) {
  RationalPoly c = condition_polynomial(problem);
  if (c.is_zero()) throw std::logic_error("reduced_condition: condition vanished identically");

  int m = 0;
  while (c.coeff(m) == 0) ++m;
  std::vector<Rational> shifted(c.coeffs().begin() + m, c.coeffs().end());
  RationalPoly stripped{std::move(shifted)};

  ContentSplit cs = content_split(stripped);
  for (int k = 1; k <= *cs.primitive.degree(); k += 2)
    if (cs.primitive.coeff(k) != 0)
      throw std::logic_error("reduced_condition: odd power survived; parity symmetry broken");
  return {std::move(cs.primitive), m};
}

namespace {

// True when coeff_poly vanishes at the root of cond isolated by bracket.
// Exact: the common-root factor gcd(coeff_poly, cond) either has the root
// or it does not.
bool vanishes_at_bracketed_root(const RationalPoly& coeff_poly, const RationalPoly& cond,
                                const RootBracket& bracket) {
  if (coeff_poly.is_zero()) return true;
  RationalPoly g = poly_gcd(coeff_poly, cond);
  if (*g.degree() == 0) return false;
  return SturmChain(g).count_roots_between(bracket.lo, bracket.hi) > 0;
}

}  // namespace

std::vector<QESSolution> solve(const QESProblem& problem, int digits) {
  validate(problem);
  if (digits < 1) throw std::invalid_argument("solve: digits must be >= 1");

  ReducedCondition rc = reduced_condition(problem);
  std::vector<QESSolution> out;
  if (*rc.poly.degree() == 0) return out;  // no admissible shifts

  CoefficientTable table = coefficients_by_recurrence(problem);
  const RationalPoly sf = squarefree_part(rc.poly);
  SturmChain sf_chain(sf);

  Rational coeff_sum(0);
  for (const auto& c : rc.poly.coeffs()) coeff_sum += abs(c);
  const Rational value_cap(pow10(-digits) * coeff_sum);

  std::vector<IsolatedRoot> roots = isolate_real_roots(rc.poly);
  for (const auto& iso : roots) {
    RootBracket bracket = iso.bracket;
    // d = 0 is never a root here (stripped), but a bracket may straddle it;
    // cut at zero so the sign of d is decided by the bracket alone.
    if (bracket.lo < 0 && 0 < bracket.hi) {
      Rational zero(0);
      if (sf_chain.count_roots_between(bracket.lo, zero) == 1) {
        bracket.hi = zero;
      } else {
        bracket.lo = zero;
      }
      bracket.sign_lo = sign(rc.poly(bracket.lo));
      bracket.sign_hi = sign(rc.poly(bracket.hi));
    }

    RefinedRoot refined = refine_root_detailed(rc.poly, bracket, digits, value_cap);

    if (vanishes_at_bracketed_root(table.a[static_cast<size_t>(problem.N)], rc.poly, bracket))
      throw std::logic_error("solve: leading coefficient vanished at an admissible shift");

    QESSolution sol;
    sol.problem = problem;
    sol.energy = problem.energy();
    sol.d_value = refined.value;
    sol.d_bracket = refined.bracket;
    sol.digits = digits;
    std::vector<Rational> exact = evaluate_coefficients(table, refined.value);
    sol.coefficients.reserve(exact.size());
    for (const auto& c : exact) sol.coefficients.push_back(c.get_d());
    sol.well_type = sign(refined.value) < 0 ? WellType::single_well : WellType::double_well;
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<RationalPoly> ode_residual(const QESProblem& problem) {
  CoefficientTable table = coefficients_by_recurrence(problem);
  const int N = problem.N;
  const RationalPoly d = RationalPoly::variable();
  auto at = [&](int i) -> RationalPoly {
    return i <= N ? table.a[static_cast<size_t>(i)] : RationalPoly();
  };
  std::vector<RationalPoly> r;
  r.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    RationalPoly row = make_rational(2L * (N - n)) * at(n) +
                       make_rational(2L * (n + 1)) * (d * at(n + 1)) +
                       make_rational(static_cast<long>(n + 1) * (n + 2)) * at(n + 2);
    r.push_back(-row);
  }
  return r;
}

std::vector<Rational> evaluate_coefficients(const CoefficientTable& table, const Rational& d) {
  std::vector<Rational> out;
  out.reserve(table.a.size());
  for (const auto& poly : table.a) out.push_back(poly(d));
  return out;
}

}  // namespace qes
