#include "ucnrot/budget.hpp"

#include <algorithm>
#include <cmath>

#include "ucnrot/airy.hpp"

namespace ucnrot {

TermBudget budget(const BouncerLevel& level, const StationaryAnsatz& ansatz,
                  const LabFrame& frame, const PhysicalConstants& k) {
  const double m = k.m_neutron;
  const double u1 = west_east_velocity(ansatz, k);
  const double u2 = north_velocity(ansatz, k);
  const RotationShift shift = rotation_shift(level, u1, frame, k);

  TermBudget b;
  b.rest_mass = m * k.c * k.c;
  b.kinetic_vertical = level.E;
  b.kinetic_horizontal = 0.5 * m * (u1 * u1 + u2 * u2);
  b.gravity_potential = m * k.g * level.z_avg;
  b.angular_momentum_state = std::abs(shift.dE);
  b.angular_momentum = std::abs(shift.state_independent_offset) + b.angular_momentum_state;
  b.spin_rotation = spin_coupling_magnitude(k);
  b.relativistic_gravity_bound = kRelativisticGravityBound;
  b.ground_energy = level.energy_scale() * airy_zero(1).lambda;
  return b;
}

std::vector<BudgetRow> negligibility_report(const TermBudget& b) {
  std::vector<BudgetRow> rows = {
      {"rest_mass", b.rest_mass, 0.0, false, false},
      {"kinetic_vertical", b.kinetic_vertical, 0.0, false, false},
      {"kinetic_horizontal", b.kinetic_horizontal, 0.0, false, false},
      {"gravity_potential", b.gravity_potential, 0.0, false, false},
      {"angular_momentum", b.angular_momentum, 0.0, false, false},
      {"spin_rotation", b.spin_rotation, 0.0, true, false},
      {"relativistic_gravity_bound", b.relativistic_gravity_bound, 0.0, true, false},
  };
  for (auto& r : rows) {
    r.ratio_to_ground = r.value / b.ground_energy;
    r.flagged = r.correction && r.ratio_to_ground > kNegligibleFraction;
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BudgetRow& x, const BudgetRow& y) { return x.value > y.value; });
  return rows;
}

bool any_flagged(const std::vector<BudgetRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const BudgetRow& r) { return r.flagged; });
}

}  // namespace ucnrot
