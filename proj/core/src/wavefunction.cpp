#include "qes/wavefunction.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace qes {

double eval_psi(const QESSolution& solution, double x) {
  if (x < 0) {
    const double mirrored = eval_psi(solution, -x);
    return solution.problem.parity == Parity::even ? mirrored : -mirrored;
  }
  double p = 0.0;
  for (auto it = solution.coefficients.rbegin(); it != solution.coefficients.rend(); ++it)
    p = p * x + *it;
  const double d = solution.d_value.get_d();
  return std::exp(-0.5 * x * x + d * x) * p;
}

WaveGrid sample(const QESSolution& solution, double x_max, int n_points) {
  if (!(x_max > 0)) throw std::invalid_argument("sample: x_max must be positive");
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("sample: n_points must be odd and >= 3");

  const int c = (n_points - 1) / 2;
  const double h = x_max / c;
  WaveGrid grid;
  grid.xs.resize(static_cast<size_t>(n_points));
  grid.psi.resize(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    grid.xs[static_cast<size_t>(i)] = (i - c) * h;
    grid.psi[static_cast<size_t>(i)] = eval_psi(solution, grid.xs[static_cast<size_t>(i)]);
  }
  double weighted = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double w = (i == 0 || i == n_points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double v = grid.psi[static_cast<size_t>(i)];
    weighted += w * v * v;
  }
  grid.norm = std::sqrt(weighted * h / 3.0);
  grid.psi_normalized.resize(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i)
    grid.psi_normalized[static_cast<size_t>(i)] = grid.psi[static_cast<size_t>(i)] / grid.norm;
  return grid;
}

namespace {

// Exact node count at shift d, or nullopt when a polynomial root lies in
// the guard band around the origin and the precision cannot tell which
// side it is on.
std::optional<int> try_count(const QESProblem& problem, const Rational& d, int digits) {
  CoefficientTable table = coefficients_by_recurrence(problem);
  std::vector<Rational> coeffs = evaluate_coefficients(table, d);

  size_t lead_zeros = 0;
  while (lead_zeros < coeffs.size() && coeffs[lead_zeros] == 0) ++lead_zeros;
  // the parity seeds pin the first surviving coefficient to 1, so the
  // stripped polynomial never vanishes at the origin
  std::vector<Rational> rest(coeffs.begin() + static_cast<long>(lead_zeros), coeffs.end());
  RationalPoly q{std::move(rest)};

  const int origin = problem.parity == Parity::odd ? 1 : 0;
  if (!q.degree() || *q.degree() == 0) return origin;

  RationalPoly sf = squarefree_part(q);
  const Rational guard = pow10(-(digits - 2));
  if (sf(guard) == 0 || sf(Rational(-guard)) == 0) return std::nullopt;
  SturmChain chain(sf);
  if (chain.count_roots_between(Rational(-guard), guard) != 0) return std::nullopt;

  const Rational bound = cauchy_root_bound(sf);
  if (bound <= guard) return origin;
  const int positive = chain.count_roots_between(guard, bound);
  return 2 * positive + origin;
}

}  // namespace

int count_nodes(const QESSolution& solution) {
  if (auto n = try_count(solution.problem, solution.d_value, solution.digits)) return *n;
  ReducedCondition rc = reduced_condition(solution.problem);
  const int digits2 = solution.digits * 2;
  Rational d2 = refine_root(rc.poly, solution.d_bracket, digits2);
  if (auto n = try_count(solution.problem, d2, digits2)) return *n;
  throw std::runtime_error("count_nodes: polynomial zero unresolved near the origin");
}

OneSidedLimits derivative_jump(const QESSolution& solution, int order) {
  if (order < 0 || order > 3)
    throw std::out_of_range("derivative_jump: order must be in 0..3");

  CoefficientTable table = coefficients_by_recurrence(solution.problem);
  RationalPoly p{evaluate_coefficients(table, solution.d_value)};
  // psi = g p with g = exp(-x^2/2 + dx); each derivative maps the
  // polynomial factor P to (d - x) P + P'
  const RationalPoly shift{std::vector<Rational>{solution.d_value, Rational(-1)}};
  RationalPoly acc = p;
  for (int m = 0; m < order; ++m) acc = shift * acc + acc.derivative();
  const Rational right = acc.coeff(0);

  // the x < 0 branch is parity * psi(-x), so its m-th derivative at the
  // origin picks up parity * (-1)^m
  const int factor = (solution.problem.parity == Parity::even ? 1 : -1) *
                     (order % 2 == 0 ? 1 : -1);
  const Rational left = factor > 0 ? right : Rational(-right);
  return {left.get_d(), right.get_d()};
}

}  // namespace qes
