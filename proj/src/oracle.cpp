#include "ucnrot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ucnrot/error.hpp"

namespace ucnrot {

namespace {

void check_grid(const GridSpec& grid) {
  if (!(grid.xi_max > 0.0) || !std::isfinite(grid.xi_max) || grid.points < 3) {
    throw std::invalid_argument("GridSpec needs xi_max > 0 and at least 3 points");
  }
}

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
};

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<double(double)>& f, const QuadratureOptions& o)
      : f_(f), options_(o) {}

  double eval(double x) {
    ++evaluations_;
    return f_(x);
  }

  double refine(const Panel& p, double tol, int depth) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    const double estimate = left + right + delta / 15.0;

    const bool deep_enough = depth >= options_.min_depth;
    if (deep_enough && std::abs(delta) <= 15.0 * tol) {
      error_ += std::abs(delta) / 15.0;
      return estimate;
    }
    if (depth >= options_.max_depth || evaluations_ >= options_.max_evaluations ||
        lm <= p.a || rm >= p.b) {
      exhausted_ = true;
      error_ += std::abs(delta) / 15.0;
      return estimate;
    }
    return refine({p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1) +
           refine({m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1);
  }

  long evaluations() const { return evaluations_; }
  double error() const { return error_; }
  bool exhausted() const { return exhausted_; }

 private:
  const std::function<double(double)>& f_;
  QuadratureOptions options_;
  long evaluations_ = 0;
  double error_ = 0.0;
  bool exhausted_ = false;
};

}  // namespace

long sturm_count(const GridSpec& grid, double x) {
  const double h = grid.spacing();
  const double off2 = 1.0 / (h * h * h * h);  // (-1/h^2)^2
  const double diag0 = 2.0 / (h * h);
  long negatives = 0;
  double q = 1.0;
  for (long i = 0; i < grid.points; ++i) {
    const double xi = h * static_cast<double>(i + 1);
    const double d = diag0 + xi - x;
    q = (i == 0) ? d : d - off2 / q;
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(d) + 1.0);
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

std::vector<double> fd_eigenvalues(const GridSpec& grid, int count) {
  check_grid(grid);
  if (count < 1 || count > 20) {
    throw std::invalid_argument("fd_eigenvalues: count must be in [1, 20]");
  }
  if (count > grid.points) {
    throw std::invalid_argument("fd_eigenvalues: more eigenvalues than grid points");
  }
  // Gershgorin: the spectrum lies in [0, 4/h^2 + xi_max].
  const double h = grid.spacing();
  const double upper_bound = 4.0 / (h * h) + grid.xi_max;

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  double lower = 0.0;
  for (int k = 0; k < count; ++k) {
    // k-th eigenvalue (0-based): smallest x with sturm_count(x) > k.
    double lo = lower;
    double hi = upper_bound;
    int iterations = 0;
    while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
      if (++iterations > 400) {
        throw NumericalError("fd_eigenvalues: bisection did not close for index " +
                             std::to_string(k + 1));
      }
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(grid, mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values.push_back(0.5 * (lo + hi));
    lower = lo;
  }
  return values;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate: need finite a < b");
  }
  if (!(options.tol > 0.0) || options.initial_panels < 1) {
    throw std::invalid_argument("integrate: tol must be positive and panels >= 1");
  }
  AdaptiveSimpson engine(f, options);
  const int panels = options.initial_panels;
  const double width = (b - a) / panels;
  const double panel_tol = options.tol / panels;

  double total = 0.0;
  double left_x = a;
  double f_left = engine.eval(a);
  for (int i = 0; i < panels; ++i) {
    const double right_x = (i + 1 == panels) ? b : a + width * (i + 1);
    const double mid = 0.5 * (left_x + right_x);
    const double f_mid = engine.eval(mid);
    const double f_right = engine.eval(right_x);
    const double whole = (right_x - left_x) / 6.0 * (f_left + 4.0 * f_mid + f_right);
    total += engine.refine({left_x, right_x, f_left, f_mid, f_right, whole}, panel_tol, 0);
    left_x = right_x;
    f_left = f_right;
  }

  QuadratureResult result;
  result.value = total;
  result.error_estimate = engine.error();
  result.evaluations = engine.evaluations();
  result.converged = !engine.exhausted() && std::isfinite(total);
  return result;
}

}  // namespace ucnrot
