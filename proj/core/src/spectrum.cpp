#include "qes/spectrum.hpp"

#include "qes/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qes {

TridiagonalOperator discretize(const SpectrumRequest& request) {
  if (!std::isfinite(request.d)) throw std::invalid_argument("discretize: d must be finite");
  if (!(request.L > 0)) throw std::invalid_argument("discretize: L must be positive");
  if (request.n < 16) throw std::invalid_argument("discretize: n must be >= 16");

  const int n = request.n % 2 == 1 ? request.n : request.n + 1;
  const double h = 2.0 * request.L / (n + 1);
  const double inv_h2 = 1.0 / (h * h);
  const int center = (n + 1) / 2;  // 1-based interior index where x = 0

  TridiagonalOperator op;
  op.n = n;
  op.h = h;
  op.diag.resize(static_cast<size_t>(n));
  op.off.assign(static_cast<size_t>(n) - 1, -inv_h2);
  op.xs.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double x = (i - center) * h;  // exactly 0.0 at the center node
    const double t = std::abs(x) - request.d;
    op.xs[static_cast<size_t>(i - 1)] = x;
    op.diag[static_cast<size_t>(i - 1)] = 2.0 * inv_h2 + t * t;
  }
  return op;
}

int eigenvalues_below(const TridiagonalOperator& op, double lambda) {
  double e2max = 0.0;
  for (double e : op.off) e2max = std::max(e2max, e * e);
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2max);

  int count = 0;
  double q = op.diag[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (size_t i = 1; i < op.diag.size(); ++i) {
    q = (op.diag[i] - lambda) - (op.off[i - 1] * op.off[i - 1]) / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

namespace {

// j-th smallest eigenvalue (0-based); invariant count(lo) <= j < count(hi).
double bisect_eigenvalue(const TridiagonalOperator& op, int j, double glo, double ghi) {
  double lo = glo;
  double hi = ghi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // interval exhausted in floating point
    if (eigenvalues_below(op, mid) >= j + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 1e-10 * std::max({1.0, std::abs(lo), std::abs(hi)})) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SpectrumReport lowest_eigenvalues(const SpectrumRequest& request) {
  TridiagonalOperator op = discretize(request);
  if (request.k < 1 || request.k > op.n)
    throw std::invalid_argument("lowest_eigenvalues: k must be in 1..n");

  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (int i = 0; i < op.n; ++i) {
    const double reach = (i > 0 ? std::abs(op.off[static_cast<size_t>(i) - 1]) : 0.0) +
                         (i + 1 < op.n ? std::abs(op.off[static_cast<size_t>(i)]) : 0.0);
    glo = std::min(glo, op.diag[static_cast<size_t>(i)] - reach);
    ghi = std::max(ghi, op.diag[static_cast<size_t>(i)] + reach);
  }

  SpectrumReport report;
  report.h = op.h;
  report.n_used = op.n;
  report.eigenvalues.reserve(static_cast<size_t>(request.k));
  for (int j = 0; j < request.k; ++j)
    report.eigenvalues.push_back(bisect_eigenvalue(op, j, glo, ghi));
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  return report;
}

SpectrumReport validate_solution(const QESSolution& solution, const ValidationOptions& options) {
  const double d = solution.d_value.get_d();
  const int nodes = count_nodes(solution);

  SpectrumRequest request;
  request.d = d;
  request.L = options.L.value_or(std::abs(d) + 10.0);
  request.n = options.n.value_or(4000);
  request.k = options.k.value_or(nodes + 3);

  SpectrumReport report = lowest_eigenvalues(request);
  const double target = static_cast<double>(solution.energy);
  int best = 0;
  for (int i = 1; i < static_cast<int>(report.eigenvalues.size()); ++i)
    if (std::abs(report.eigenvalues[static_cast<size_t>(i)] - target) <
        std::abs(report.eigenvalues[static_cast<size_t>(best)] - target))
      best = i;

  SpectrumMatch match;
  match.target_energy = target;
  match.nearest_eigenvalue = report.eigenvalues[static_cast<size_t>(best)];
  match.gap = std::abs(match.nearest_eigenvalue - target);
  match.eigenindex = best;
  match.node_count = nodes;
  match.index_matches_nodes = best == nodes;
  report.matched = match;
  return report;
}

}  // namespace qes
