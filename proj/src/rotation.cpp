#include "ucnrot/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace ucnrot {

LabFrame make_lab_frame(double cos_alpha, const PhysicalConstants& k) {
  if (!(cos_alpha >= 0.0 && cos_alpha <= 1.0)) {
    throw std::invalid_argument("make_lab_frame: cos_alpha must lie in [0, 1]");
  }
  validate(k);
  LabFrame f;
  f.cos_alpha = cos_alpha;
  f.sin_alpha = std::sqrt((1.0 - cos_alpha) * (1.0 + cos_alpha));
  f.rho0 = k.earth_radius * cos_alpha;
  f.omega = k.omega_earth;
  return f;
}

double rho(double y, double z, const LabFrame& frame) {
  if (!(std::abs(y) < kMaxLabOffset) || !(std::abs(z) < kMaxLabOffset)) {
    throw std::invalid_argument("rho: |y| and |z| must be below 1 m");
  }
  return frame.rho0 + z * frame.cos_alpha - y * frame.sin_alpha;
}

double delta_h_coefficient(const StationaryAnsatz& ansatz, double rho_val,
                           const LabFrame& frame, const PhysicalConstants& k) {
  return -frame.omega * k.hbar * ansatz.k1 * rho_val;
}

RotationShift rotation_shift(const BouncerLevel& level, double u1, const LabFrame& frame,
                             const PhysicalConstants& k) {
  const double coupling = -frame.omega * k.m_neutron * u1;
  RotationShift s;
  s.dE = coupling * frame.cos_alpha * level.z_avg;
  s.relative = s.dE / level.E;
  s.state_independent_offset = coupling * frame.rho0;
  s.y_moment_term = 0.0;
  return s;
}

double relative_shift(double u1, const LabFrame& frame, const PhysicalConstants& k) {
  return -2.0 * frame.omega * u1 * frame.cos_alpha / (3.0 * k.g);
}

double spin_coupling_magnitude(const PhysicalConstants& k) {
  return k.omega_earth * k.hbar;
}

double classical_energy(const std::array<double, 3>& u, double z, double y,
                        const LabFrame& frame, const PhysicalConstants& k) {
  const double r = rho(y, z, frame);
  const double speed2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  const double m = k.m_neutron;
  return 0.5 * m * speed2 + m * k.g * z - 0.5 * m * frame.omega * frame.omega * r * r;
}

double classical_energy_z_gradient(double z, double y, const LabFrame& frame,
                                   const PhysicalConstants& k) {
  const double m = k.m_neutron;
  return m * k.g - m * frame.omega * frame.omega * rho(y, z, frame) * frame.cos_alpha;
}

}  // namespace ucnrot
