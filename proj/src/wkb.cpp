#include "ucnrot/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "ucnrot/airy.hpp"
#include "ucnrot/spectrum.hpp"

namespace ucnrot {

namespace {

double scale_factor(double x, const WkbFit& fit) { return std::cbrt((x / fit.x_ref) * (x / fit.x_ref)); }

void require_index(long n) {
  if (n < 1) throw std::invalid_argument("WKB: n must be >= 1");
}

bool spacing_reached(double relative, long n) {
  const double hi = airy_zero(n).lambda;
  const double lo = airy_zero(n - 1).lambda;
  return std::abs(relative) * hi >= hi - lo;
}

}  // namespace

double round_significant(double v, int digits) {
  if (digits < 1 || digits > 17) throw std::invalid_argument("round_significant: digits");
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return std::strtod(buf, nullptr);
}

double fit_A(double E_prev, double E_ref, long n_ref) {
  if (n_ref < 2) throw std::invalid_argument("fit_A: n_ref must be >= 2");
  if (!(E_prev > 0.0) || !(E_ref > E_prev)) {
    throw std::invalid_argument("fit_A: need E_ref > E_prev > 0");
  }
  return (E_ref - E_prev) * std::cbrt(wkb_abscissa(n_ref));
}

double fit_B(double relative_shift, double E_ref, long n_ref) {
  require_index(n_ref);
  if (!(E_ref > 0.0)) throw std::invalid_argument("fit_B: E_ref must be positive");
  const double x = wkb_abscissa(n_ref);
  return relative_shift * E_ref / std::cbrt(x * x);
}

WkbFit anchor_fit(const QuotedAnchors& anchors) {
  WkbFit fit;
  fit.A_fitted = fit_A(anchors.E6, anchors.E7, anchors.n_ref);
  fit.B_fitted = fit_B(anchors.relative, anchors.E7, anchors.n_ref);
  fit.A = peV_to_joules(round_significant(joules_to_peV(fit.A_fitted), anchors.A_digits));
  fit.B = peV_to_joules(round_significant(joules_to_peV(fit.B_fitted), anchors.B_digits));
  fit.x_ref = wkb_abscissa(anchors.n_ref);
  fit.E_ref = anchors.E7;
  fit.H_ref = anchors.H7;
  fit.u1 = anchors.u1;
  return fit;
}

double wkb_reduced_spacing_coefficient() {
  const double c = 1.5 * std::numbers::pi;
  return 2.0 / 3.0 * std::cbrt(c * c);
}

WkbFit spectrum_fit(const ReducedScales& scales, const PhysicalConstants& k,
                    const LabFrame& frame, double u1, long n_ref) {
  const BouncerLevel ref = level(n_ref, scales, k);
  WkbFit fit;
  fit.A = fit.A_fitted = wkb_reduced_spacing_coefficient() * scales.e;
  fit.B = fit.B_fitted = fit_B(relative_shift(u1, frame, k), ref.E, n_ref);
  fit.x_ref = wkb_abscissa(n_ref);
  fit.E_ref = ref.E;
  fit.H_ref = ref.H;
  fit.u1 = u1;
  return fit;
}

double wkb_energy(long n, const WkbFit& fit) {
  require_index(n);
  return fit.E_ref * scale_factor(wkb_abscissa(n), fit);
}

double wkb_height(long n, const WkbFit& fit) {
  require_index(n);
  return fit.H_ref * scale_factor(wkb_abscissa(n), fit);
}

double wkb_spacing(long n, const WkbFit& fit) {
  require_index(n);
  return fit.A / std::cbrt(wkb_abscissa(n));
}

double wkb_spacing_corrected(long n, const WkbFit& fit) {
  const double x = wkb_abscissa(n);
  return wkb_spacing(n, fit) * (1.0 + 1.0 / (6.0 * x));
}

double wkb_shift(long n, const WkbFit& fit) {
  require_index(n);
  const double x = wkb_abscissa(n);
  return fit.B * std::cbrt(x * x);
}

double exact_spacing_coefficient(long n, const ReducedScales& scales) {
  return level_spacing(n, scales) * std::cbrt(wkb_abscissa(n));
}

std::optional<CrossoverResult> crossover(const WkbFit& fit) {
  if (fit.B == 0.0) return std::nullopt;
  if (!(fit.A > 0.0) || !(fit.x_ref > 0.0)) {
    throw std::invalid_argument("crossover: fit needs A > 0 and x_ref > 0");
  }
  CrossoverResult r;
  r.x_star = fit.A / std::abs(fit.B);
  r.n_star = std::lround(r.x_star + 0.25);
  const double s = scale_factor(r.x_star, fit);
  r.E_star = fit.E_ref * s;
  r.H_star = fit.H_ref * s;
  return r;
}

std::optional<long> exact_crossover_level(double relative, long n_max) {
  if (relative == 0.0 || !std::isfinite(relative)) return std::nullopt;
  long lo = 1;  // condition false (or untested) at lo
  long hi = 2;
  while (!spacing_reached(relative, hi)) {
    lo = hi;
    if (hi >= n_max) return std::nullopt;
    hi = std::min(2 * hi, n_max);
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (spacing_reached(relative, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ContinuumReport continuum_report(const WkbFit& fit, double u1_lo, double u1_hi,
                                 double slit_height) {
  if (!(u1_lo <= u1_hi) || !std::isfinite(u1_lo) || !std::isfinite(u1_hi)) {
    throw std::invalid_argument("continuum_report: need a finite range u1_lo <= u1_hi");
  }
  if (!(slit_height > 0.0)) {
    throw std::invalid_argument("continuum_report: slit height must be positive");
  }
  ContinuumReport r;
  r.slit_height = slit_height;
  r.u1_lo = u1_lo;
  r.u1_hi = u1_hi;

  const double x_top = fit.x_ref * std::pow(slit_height / fit.H_ref, 1.5);
  r.top_level = static_cast<long>(std::floor(x_top + 0.25));

  const double per_velocity = fit.u1 != 0.0 ? fit.B / fit.u1 : 0.0;
  const double smear = std::abs(per_velocity) * (u1_hi - u1_lo);
  if (smear > 0.0) {
    const double x_onset = fit.A / smear;
    r.smear_onset = std::max(1L, static_cast<long>(std::ceil(x_onset + 0.25)));
    if (*r.smear_onset <= r.top_level) {
      r.first_flagged = *r.smear_onset;
      r.last_flagged = r.top_level;
      r.flagged_count = r.last_flagged - r.first_flagged + 1;
    }
  }
  if (const auto c = crossover(fit)) r.at_or_above_crossover = slit_height >= c->H_star;
  return r;
}

}  // namespace ucnrot
