#pragma once

// Semiclassical scaling of the bouncer spectrum. With x_n = n - 1/4 the WKB
// levels go as E_n ~ x_n^(2/3), so the spacing behaves like A x_n^(-1/3) while
// the rotation shift, proportional to E_n, behaves like B x_n^(2/3). The two
// meet at x* = A / |B|.

#include <optional>

#include "ucnrot/constants.hpp"
#include "ucnrot/rotation.hpp"

namespace ucnrot {

inline double wkb_abscissa(long n) { return static_cast<double>(n) - 0.25; }

struct WkbFit {
  double A = 0.0;      // J, spacing coefficient
  double B = 0.0;      // J, shift coefficient (sign of the relative shift)
  double x_ref = 0.0;  // abscissa of the reference level
  double E_ref = 0.0;  // J
  double H_ref = 0.0;  // m
  double u1 = 0.0;     // m/s at which B was evaluated
  // A and B before any rounding to quoted precision.
  double A_fitted = 0.0;
  double B_fitted = 0.0;
};

/// A = (E_n - E_{n-1}) x_n^(1/3) from two neighbouring levels (default n = 7).
/// Throws std::invalid_argument unless E_n > E_{n-1} > 0.
double fit_A(double E_prev, double E_ref, long n_ref = 7);

/// B = relative_shift * E_ref / x_ref^(2/3). Throws for E_ref <= 0.
double fit_B(double relative_shift, double E_ref, long n_ref = 7);


/// Tabulated Granit-configuration levels E_6, E_7, H_7, the rounded relative
/// shift for u1 = +10 m/s, and the number of significant digits A and B are
/// quoted to.
struct QuotedAnchors {
  double E6 = peV_to_joules(5.431);
  double E7 = peV_to_joules(6.044);
  double H7 = 58.945e-6;
  long n_ref = 7;
  double relative = -3.4e-5;
  double u1 = 10.0;
  int A_digits = 4;
  int B_digits = 3;
};

/// Fit from the quoted anchors, with A and B rounded to their quoted digits
/// before use (the unrounded values are kept in A_fitted / B_fitted).
WkbFit anchor_fit(const QuotedAnchors& anchors = {});

/// Fit from the computed spectrum: A is the large-n WKB coefficient
/// (2/3)(3 pi / 2)^(2/3) e, and B uses the exact level n_ref and the
/// closed-form relative shift for u1.
WkbFit spectrum_fit(const ReducedScales& scales, const PhysicalConstants& k,
                    const LabFrame& frame, double u1, long n_ref = 7);

/// (2/3)(3 pi / 2)^(2/3): large-n limit of (lambda_n - lambda_{n-1}) x_n^(1/3).
double wkb_reduced_spacing_coefficient();

double wkb_energy(long n, const WkbFit& fit);
double wkb_height(long n, const WkbFit& fit);
double wkb_spacing(long n, const WkbFit& fit);
/// A x^(-1/3) (1 + 1/(6x)): next term of x^(2/3) - (x - 1)^(2/3). Diagnostic only.
double wkb_spacing_corrected(long n, const WkbFit& fit);
double wkb_shift(long n, const WkbFit& fit);

/// e (lambda_n - lambda_{n-1}) x_n^(1/3) from the exact Airy zeros.
double exact_spacing_coefficient(long n, const ReducedScales& scales);

struct CrossoverResult {
  double x_star = 0.0;
  long n_star = 0;      // round(x_star + 1/4)
  double E_star = 0.0;  // J
  double H_star = 0.0;  // m
};

/// Level where |shift| equals the spacing. Empty when B = 0 (no crossover).
std::optional<CrossoverResult> crossover(const WkbFit& fit);

/// Smallest n >= 2 with |relative| lambda_n >= lambda_n - lambda_{n-1}, using
/// exact Airy zeros. Empty when relative = 0 or no such n <= n_max.
std::optional<long> exact_crossover_level(double relative, long n_max = 4'000'000);

struct ContinuumReport {
  double slit_height = 0.0;  // m
  double u1_lo = 0.0;
  double u1_hi = 0.0;
  long top_level = 0;               // highest n with H_n <= slit_height
  std::optional<long> smear_onset;  // first n whose smearing reaches the spacing
  long first_flagged = 0;           // band [first, last], empty when count == 0
  long last_flagged = 0;
  long flagged_count = 0;
  bool at_or_above_crossover = false;  // slit_height >= H_star
};

/// Levels inside a slit of the given height whose rotational smearing
/// |B/u1| (u1_hi - u1_lo) x^(2/3) reaches the local spacing A x^(-1/3).
ContinuumReport continuum_report(const WkbFit& fit, double u1_lo, double u1_hi,
                                 double slit_height);

/// v rounded to `digits` significant decimal digits.
double round_significant(double v, int digits);

}  // namespace ucnrot
