#pragma once

// First-order effect of the Earth's rotation on the bouncer levels through the
// angular-momentum term dH = -omega . L.
//
// Lab axes: origin A on the mirror, x West->East (= e_theta), y North, z the
// local vertical. alpha is the latitude, so the distance to the rotation axis
// near A is rho = rho0 + z cos(alpha) - y sin(alpha) with rho0 = R cos(alpha).

#include <array>
#include <string_view>

#include "ucnrot/constants.hpp"
#include "ucnrot/spectrum.hpp"

namespace ucnrot {

struct LabFrame {
  double cos_alpha = 0.0;
  double sin_alpha = 0.0;
  double rho0 = 0.0;   // m
  double omega = 0.0;  // rad/s
};

/// Northern-hemisphere frame with cos(alpha) in [0, 1] and omega taken from
/// the constants. Throws std::invalid_argument for cos(alpha) outside [0, 1].
LabFrame make_lab_frame(double cos_alpha, const PhysicalConstants& k);

/// Coordinates beyond this are outside the linearized geometry.
inline constexpr double kMaxLabOffset = 1.0;  // m

/// Distance to the rotation axis, linearized about A. |y|, |z| < 1 m.
double rho(double y, double z, const LabFrame& frame);

/// Scalar c such that (dH) phi = c phi for the plane-wave Ansatz at fixed
/// rho: c = -omega hbar k1 rho = -omega m u1 rho.
double delta_h_coefficient(const StationaryAnsatz& ansatz, double rho_val,
                           const LabFrame& frame, const PhysicalConstants& k);

struct RotationShift {
  double dE = 0.0;        // J, state-dependent part only
  double relative = 0.0;  // dE / E_n
  // Dropped from dE because they are common to every level.
  double state_independent_offset = 0.0;  // -omega m u1 rho0, J
  double y_moment_term = 0.0;             // reported as zero
};

/// (dE_n)_rot = -omega m u1 cos(alpha) <z>_n, with <z>_n = (2/3) H_n.
RotationShift rotation_shift(const BouncerLevel& level, double u1, const LabFrame& frame,
                             const PhysicalConstants& k);

/// -2 omega u1 cos(alpha) / (3 g); the same for every level.
double relative_shift(double u1, const LabFrame& frame, const PhysicalConstants& k);

inline constexpr std::string_view kSpinConventionNote =
    "spin-rotation term reported as omega*hbar; with S = hbar*sigma/2 the "
    "eigenvalues of omega.S are +-omega*hbar/2";

/// Order-of-magnitude size of the spin-rotation coupling, omega hbar.
double spin_coupling_magnitude(const PhysicalConstants& k);

/// Classical energy in the rotating frame,
/// m u^2 / 2 + m g z - m omega^2 rho(y, z)^2 / 2.
double classical_energy(const std::array<double, 3>& u, double z, double y,
                        const LabFrame& frame, const PhysicalConstants& k);

/// d(classical_energy)/dz at fixed u and y: m g - m omega^2 rho cos(alpha).
double classical_energy_z_gradient(double z, double y, const LabFrame& frame,
                                   const PhysicalConstants& k);

}  // namespace ucnrot
