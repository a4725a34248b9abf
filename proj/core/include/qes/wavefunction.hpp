#pragma once

#include "qes/families.hpp"

#include <vector>

namespace qes {

struct WaveGrid {
  std::vector<double> xs;
  std::vector<double> psi;
  std::vector<double> psi_normalized;
  double norm = 0;  // sqrt of the Simpson estimate of the squared norm
};

// psi(x) = exp(-x^2/2 + d x) p(x) on x >= 0, extended to x < 0 by the
// solution's parity.
double eval_psi(const QESSolution& solution, double x);

// Symmetric grid of n_points (odd, >= 3) spanning [-x_max, x_max]; the
// midpoint is exactly x = 0. Normalization by composite Simpson, whose
// panel count is even on an odd grid.
WaveGrid sample(const QESSolution& solution, double x_max, int n_points);

// Distinct real zeros of psi over the whole line, counted exactly from the
// polynomial part via Sturm chains: positive roots are mirrored, the origin
// contributes one node for odd parity. A polynomial root inside the guard
// band 10^(-digits+2) around the origin is ambiguous at the solution's
// precision; the count then retries once at doubled precision before
// giving up.
int count_nodes(const QESSolution& solution);

struct OneSidedLimits {
  double left = 0;
  double right = 0;
};

// One-sided limits at the origin of the order-th derivative of psi,
// order in 0..3, computed symbolically and converted to double at the end.
// The potential's corner first separates the limits at order 3, and only
// for even states: the jump is -4 d psi(0), which odd states null out.
OneSidedLimits derivative_jump(const QESSolution& solution, int order);

}  // namespace qes
