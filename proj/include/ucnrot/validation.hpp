#pragma once

// Cross-checks of every headline number against either the reference values
// or an independent numerical route. Shared by the `validate` subcommand and
// the acceptance test binary.

#include <string>
#include <vector>

namespace ucnrot {

enum class Tolerance {
  relative,  // |measured - target| <= tol * |target|
  absolute,  // |measured - target| <= tol
  at_most,   // measured <= tol
  info,      // reported only, never fails
};

struct Measurement {
  std::string name;
  double measured = 0.0;
  double target = 0.0;
  double tol = 0.0;
  Tolerance kind = Tolerance::relative;
  bool passed = false;
};

struct Criterion {
  std::string id;
  std::string title;
  std::vector<Measurement> measurements;
  double runtime_limit = 0.0;  // seconds; 0 means no limit
  double seconds = 0.0;
  std::string error;  // set when the check threw

  bool passed() const;
};

Measurement measure(std::string name, double measured, double target, double tol,
                    Tolerance kind);

/// The ten exit criteria, in order.
std::vector<Criterion> acceptance_criteria();

/// Additional oracle cross-checks (Airy values, seams, orthogonality,
/// exact-vs-WKB crossover).
std::vector<Criterion> oracle_criteria();

}  // namespace ucnrot
