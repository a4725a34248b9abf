#pragma once

#include "qes/families.hpp"

#include <optional>
#include <vector>

namespace qes {

struct SpectrumRequest {
  double d = 0;
  double L = 0;  // half-width of the Dirichlet box
  int n = 0;     // requested interior points; rounded up to odd
  int k = 0;     // number of eigenvalues from the bottom of the spectrum
};

struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples nodes i and i+1
  std::vector<double> xs;   // interior grid points
  double h = 0;
  int n = 0;  // interior point count actually used (odd)
};

// Central second differences for -u'' + (|x| - d)^2 u on (-L, L) with
// Dirichlet walls. The interior count is rounded up to odd so the
// potential's corner at x = 0 sits exactly on a node; the grid is built
// symmetrically around that node.
TridiagonalOperator discretize(const SpectrumRequest& request);

// Inertia count: eigenvalues of the operator strictly below lambda,
// from the signs of the LDL^T pivots (with a small-pivot guard).
int eigenvalues_below(const TridiagonalOperator& op, double lambda);

struct SpectrumMatch {
  double target_energy = 0;
  double nearest_eigenvalue = 0;
  double gap = 0;
  int eigenindex = 0;  // 0-based position in the ascending spectrum
  int node_count = 0;
  bool index_matches_nodes = false;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // the k lowest, ascending
  double h = 0;
  int n_used = 0;
  std::optional<SpectrumMatch> matched;
};

// The k lowest eigenvalues by bisection on the inertia count between the
// Gershgorin bounds, to relative width 1e-10. Fully deterministic.
SpectrumReport lowest_eigenvalues(const SpectrumRequest& request);

struct ValidationOptions {
  std::optional<double> L;
  std::optional<int> n;
  std::optional<int> k;
};

// Cross-checks one exact solution against the discretized operator.
// Defaults: L = |d| + 10, n = 4000, k = node_count + 3. Reports the
// eigenvalue nearest the exact energy and whether its index equals the
// node count (the oscillation-theorem pairing).
SpectrumReport validate_solution(const QESSolution& solution,
                                 const ValidationOptions& options = {});

}  // namespace qes
