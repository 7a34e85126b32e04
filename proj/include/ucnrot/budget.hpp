#pragma once

// Order-of-magnitude budget of the terms of the post-Newtonian two-spinor
// Hamiltonian acting on one neutron state, with a = 0 (the lab observer sits
// on the rotation axis).

#include <string>
#include <string_view>
#include <vector>

#include "ucnrot/rotation.hpp"
#include "ucnrot/spectrum.hpp"

namespace ucnrot {

/// Known upper bound on the relativistic corrections of the static
/// gravitational field to UCN levels. Quoted, not computed.
inline constexpr double kRelativisticGravityBound = 3e-53;  // J
inline constexpr std::string_view kRelativisticGravityBoundSource =
    "external bound on Dirac-Fock-Weyl corrections to UCN levels in Earth's field";

/// Threshold, relative to E_1, above which a correction term is flagged.
inline constexpr double kNegligibleFraction = 1e-3;

struct TermBudget {
  double rest_mass = 0.0;            // m c^2
  double kinetic_vertical = 0.0;     // E_n
  double kinetic_horizontal = 0.0;   // m u^2 / 2
  double gravity_potential = 0.0;    // m g <z>_n
  double angular_momentum = 0.0;     // |omega m u1 rho0| + |dE_n|
  double angular_momentum_state = 0.0;  // |dE_n| alone
  double spin_rotation = 0.0;        // omega hbar
  double relativistic_gravity_bound = kRelativisticGravityBound;
  double ground_energy = 0.0;        // E_1, the normalisation of the report
};

TermBudget budget(const BouncerLevel& level, const StationaryAnsatz& ansatz,
                  const LabFrame& frame, const PhysicalConstants& k);

struct BudgetRow {
  std::string term;
  double value = 0.0;           // J
  double ratio_to_ground = 0.0;  // value / E_1
  bool correction = false;      // beyond the scalar Schroedinger Hamiltonian
  bool flagged = false;         // correction with ratio > kNegligibleFraction
};

/// Terms sorted by decreasing magnitude.
std::vector<BudgetRow> negligibility_report(const TermBudget& b);

bool any_flagged(const std::vector<BudgetRow>& rows);

}  // namespace ucnrot
