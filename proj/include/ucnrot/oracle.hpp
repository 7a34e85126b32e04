#pragma once

// Brute-force numerics used to cross-check the Airy kernel and the bouncer
// spectrum. Nothing in this module depends on airy.hpp.

#include <functional>
#include <vector>

namespace ucnrot {

/// Uniform grid on (0, xi_max) with `points` interior nodes and Dirichlet
/// walls at both ends.
struct GridSpec {
  double xi_max = 30.0;
  long points = 20000;

  double spacing() const { return xi_max / static_cast<double>(points + 1); }
};

/// Lowest `count` eigenvalues (ascending) of the second-order finite
/// difference discretization of -d^2/dxi^2 + xi, found by Sturm-sequence
/// bisection on the symmetric tridiagonal matrix.
/// Throws std::invalid_argument for count outside [1, 20] or a degenerate
/// grid; ucnrot::NumericalError if a bisection fails to close.
std::vector<double> fd_eigenvalues(const GridSpec& grid, int count);

/// Number of eigenvalues of the discretized operator strictly below x.
long sturm_count(const GridSpec& grid, double x);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double tol = 1e-10;           // absolute
  long max_evaluations = 4'000'000;
  int initial_panels = 32;
  int min_depth = 3;
  int max_depth = 40;
};

/// Adaptive composite Simpson rule with Richardson correction. The interval
/// is split into `initial_panels` panels, each halved until the two-level
/// estimates agree within its share of tol. When the evaluation budget or
/// depth runs out the best estimate is still returned with converged = false.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options);

inline QuadratureResult integrate(const std::function<double(double)>& f, double a,
                                  double b, double tol) {
  QuadratureOptions options;
  options.tol = tol;
  return integrate(f, a, b, options);
}

}  // namespace ucnrot
