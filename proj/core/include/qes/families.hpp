#pragma once

#include "qes/polynomial.hpp"
#include "qes/roots.hpp"

#include <vector>

namespace qes {

// Bound-state candidates for the shifted oscillator V(x) = (|x| - d)^2 take
// the form psi(x) = exp(-x^2/2 + d x) p(x) on x >= 0, mirrored by parity,
// with p a degree-N polynomial. The candidate has energy E = 2N + 1; it is
// an actual eigenstate exactly when the shift d is a root of the family's
// condition polynomial.
enum class Parity { even, odd };

struct QESProblem {
  int N = 0;
  Parity parity = Parity::even;
  long energy() const { return 2L * N + 1; }
};

// a[n] is the x^n coefficient of p as a polynomial in the shift d.
// Even family: a_0 = 1; odd family: a_0 = 0, a_1 = 1.
struct CoefficientTable {
  QESProblem problem;
  std::vector<RationalPoly> a;  // indices 0..N
};

// Three-term recurrence walked upward from the parity seeds:
//   2(N-n) a_n + 2d(n+1) a_{n+1} + (n+1)(n+2) a_{n+2} = 0,  n = 0..N-2.
CoefficientTable coefficients_by_recurrence(const QESProblem& problem);

// One recurrence step past the table: a_{N+1}, whose vanishing is the
// admissibility condition on d.
RationalPoly extended_coefficient(const QESProblem& problem);

// Determinant of the k-by-k leading block of the tridiagonal system the
// recurrence encodes, via the continuant recurrence. k >= 0; D_0 = 1.
RationalPoly continuant_determinant(const QESProblem& problem, int k);

// Closed-form coefficient route: scaled continuant determinants.
// Even family, 1 <= k <= N+1: a_k = (-1)^k D_k / (k! (k-1)!).
// Odd family,  1 <= k <= N:   a_{k+1} = (-1)^k D_k / ((k+1)! k!).
// Out-of-range k throws.
RationalPoly coefficients_by_determinant(const QESProblem& problem, int k);

// The polynomial in d whose real roots are the admissible shifts:
// the full-size continuant (D_{N+1} even, D_N odd). Proportional to
// extended_coefficient.
RationalPoly condition_polynomial(const QESProblem& problem);

struct ReducedCondition {
  RationalPoly poly;          // primitive, positive leading coefficient, even powers only
  int stripped_power = 0;     // multiplicity of the discarded root at d = 0
};

// condition_polynomial with the d^m factor stripped (the harmonic d = 0
// solutions are excluded by convention) and content removed.
ReducedCondition reduced_condition(const QESProblem& problem);

enum class WellType { single_well, double_well };

struct QESSolution {
  QESProblem problem;
  long energy = 0;
  Rational d_value;             // midpoint of the final bisection bracket
  RootBracket d_bracket;        // final refinement bracket (never straddles zero)
  int digits = 0;               // certified |d_value - root| < 10^(-digits)
  std::vector<double> coefficients;  // p's coefficients at d_value, indices 0..N
  WellType well_type = WellType::single_well;
};

// Every admissible shift for the family, ascending in d. digits >= 1.
// The returned d_value also satisfies
//   |reduced_condition(d_value)| <= 10^(-digits) * sum |coeffs|,
// one order tighter than the documented 10^(1-digits) bound.
std::vector<QESSolution> solve(const QESProblem& problem, int digits);

// Substituting psi = exp(-x^2/2 + dx) p(x) with E = 2N+1 into the
// eigenvalue equation leaves p'' + 2(d-x) p' + 2N p = 0 on x > 0.
// R[n] is the x^n coefficient of that residual built from the family's
// coefficient table: identically zero for every n except n = N-1, where
// it is proportional to the condition polynomial.
std::vector<RationalPoly> ode_residual(const QESProblem& problem);

// Exact coefficients of p at a specific shift.
std::vector<Rational> evaluate_coefficients(const CoefficientTable& table, const Rational& d);

}  // namespace qes
