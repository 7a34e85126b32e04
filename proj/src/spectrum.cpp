#include "ucnrot/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ucnrot/airy.hpp"
#include "ucnrot/error.hpp"

namespace ucnrot {

namespace {

QuadratureOptions options_for(const QuadratureSettings& s) {
  if (!(s.tail > 0.0) || !(s.tol > 0.0)) {
    throw std::invalid_argument("QuadratureSettings needs positive tail and tol");
  }
  QuadratureOptions o;
  o.tol = s.tol;
  o.initial_panels = 64;
  return o;
}

double checked(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    throw NumericalError(std::string(what) + ": quadrature did not converge (estimate " +
                         std::to_string(r.value) + ", error " +
                         std::to_string(r.error_estimate) + ")");
  }
  return r.value;
}

}  // namespace

BouncerLevel level(long n, const ReducedScales& scales, const PhysicalConstants& k) {
  if (n < 1) throw std::invalid_argument("level: n must be >= 1");
  validate(k);
  const double lambda = airy_zero(n).lambda;
  BouncerLevel out;
  out.n = n;
  out.lambda = lambda;
  out.E = scales.e * lambda;
  out.H = scales.l * lambda;
  out.z_avg = 2.0 / 3.0 * scales.l * lambda;
  return out;
}

StationaryAnsatz ansatz_from_velocity(const BouncerLevel& level, double u1, double u2,
                                      const PhysicalConstants& k) {
  return {k.m_neutron * u1 / k.hbar, k.m_neutron * u2 / k.hbar, level};
}

double west_east_velocity(const StationaryAnsatz& a, const PhysicalConstants& k) {
  return k.hbar * a.k1 / k.m_neutron;
}

double north_velocity(const StationaryAnsatz& a, const PhysicalConstants& k) {
  return k.hbar * a.k2 / k.m_neutron;
}

Wavefunction::Wavefunction(const BouncerLevel& level)
    : lambda_(level.lambda), inv_norm_(1.0 / std::abs(airy_ai_prime(-level.lambda))) {}

double Wavefunction::operator()(double xi) const {
  if (!(xi >= 0.0)) throw std::invalid_argument("wavefunction: xi must be >= 0 (mirror)");
  return airy_ai(xi - lambda_) * inv_norm_;
}

double wavefunction_value(const BouncerLevel& level, double xi) {
  return Wavefunction(level)(xi);
}

double mean_height_analytic(const BouncerLevel& level) {
  return 2.0 / 3.0 * level.length_scale() * level.lambda;
}

double height_density(const Wavefunction& psi, double xi) {
  const double v = psi(xi);
  return xi * v * v;
}

double mean_height_quadrature(const BouncerLevel& level, const QuadratureSettings& s) {
  const Wavefunction psi(level);
  const auto r = integrate([&psi](double xi) { return height_density(psi, xi); }, 0.0,
                           level.lambda + s.tail, options_for(s));
  return level.length_scale() * checked(r, "mean_height_quadrature");
}

double overlap_quadrature(const BouncerLevel& a, const BouncerLevel& b,
                          const QuadratureSettings& s) {
  const Wavefunction pa(a);
  const Wavefunction pb(b);
  const double upper = std::max(a.lambda, b.lambda) + s.tail;
  const auto r =
      integrate([&](double xi) { return pa(xi) * pb(xi); }, 0.0, upper, options_for(s));
  return checked(r, "overlap_quadrature");
}

QuadratureResult airy_square_integral(double lambda, const QuadratureSettings& s) {
  return integrate(
      [lambda](double xi) {
        const double v = airy_ai(xi - lambda);
        return v * v;
      },
      0.0, lambda + s.tail, options_for(s));
}

double level_spacing(long n, const ReducedScales& scales) {
  if (n < 2) throw std::invalid_argument("level_spacing: n must be >= 2");
  return scales.e * (airy_zero(n).lambda - airy_zero(n - 1).lambda);
}

}  // namespace ucnrot
