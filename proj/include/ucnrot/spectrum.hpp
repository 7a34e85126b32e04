#pragma once

// Stationary states of a neutron bouncing on a horizontal mirror in uniform
// gravity: E_n = e lambda_n, H_n = l lambda_n = E_n / (m g), and the
// unit-normalized eigenfunction Ai(xi - lambda_n) / |Ai'(-lambda_n)|.

#include "ucnrot/constants.hpp"
#include "ucnrot/oracle.hpp"

namespace ucnrot {

struct BouncerLevel {
  long n = 0;
  double lambda = 0.0;  // reduced energy
  double E = 0.0;       // J
  double H = 0.0;       // classical turning point, m
  double z_avg = 0.0;   // <z>_n from <xi>_n = 2 lambda_n / 3, m

  /// Reduced length l recovered from the level itself.
  double length_scale() const { return H / lambda; }
  double energy_scale() const { return E / lambda; }
};

BouncerLevel level(long n, const ReducedScales& scales, const PhysicalConstants& k);

/// Plane wave along the horizontal (x = West->East, y = North) times the
/// vertical bouncer state.
struct StationaryAnsatz {
  double k1 = 0.0;  // 1/m, West->East
  double k2 = 0.0;  // 1/m, North
  BouncerLevel level;
};

StationaryAnsatz ansatz_from_velocity(const BouncerLevel& level, double u1, double u2,
                                      const PhysicalConstants& k);
/// u1 = hbar k1 / m.
double west_east_velocity(const StationaryAnsatz& a, const PhysicalConstants& k);
double north_velocity(const StationaryAnsatz& a, const PhysicalConstants& k);

/// Normalized vertical eigenfunction on xi >= 0 (psi(0) = 0 at the mirror).
class Wavefunction {
 public:
  explicit Wavefunction(const BouncerLevel& level);
  /// Throws std::invalid_argument for xi < 0.
  double operator()(double xi) const;
  double lambda() const { return lambda_; }

 private:
  double lambda_;
  double inv_norm_;
};

double wavefunction_value(const BouncerLevel& level, double xi);

/// Integration settings for the all-space integrals, truncated at
/// xi = lambda_n + tail where the eigenfunction has decayed below 1e-10.
struct QuadratureSettings {
  double tail = 15.0;
  double tol = 1e-12;
};

/// (2/3) l lambda_n, the stored z_avg.
double mean_height_analytic(const BouncerLevel& level);

/// l * integral of xi psi_n(xi)^2. Throws NumericalError if the quadrature
/// does not converge.
double mean_height_quadrature(const BouncerLevel& level, const QuadratureSettings& s = {});

/// xi psi_n(xi)^2, the integrand of mean_height_quadrature.
double height_density(const Wavefunction& psi, double xi);

/// integral of psi_n psi_m over the half-line.
double overlap_quadrature(const BouncerLevel& a, const BouncerLevel& b,
                          const QuadratureSettings& s = {});

/// integral_0^(lambda + tail) Ai(xi - lambda)^2 dxi, to compare with Ai'(-lambda)^2.
QuadratureResult airy_square_integral(double lambda, const QuadratureSettings& s = {});

/// e (lambda_n - lambda_{n-1}); requires n >= 2.
double level_spacing(long n, const ReducedScales& scales);

}  // namespace ucnrot
