#include <cstdio>
#include <string>

#include "ucnrot/validation.hpp"

namespace {

const char* kind_symbol(ucnrot::Tolerance k) {
  switch (k) {
    case ucnrot::Tolerance::relative: return "rel";
    case ucnrot::Tolerance::absolute: return "abs";
    case ucnrot::Tolerance::at_most: return "<=";
    case ucnrot::Tolerance::info: return "info";
  }
  return "";
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : ucnrot::acceptance_criteria()) {
    const bool ok = c.passed();
    if (!ok) ++failures;
    std::printf("%s %-5s %s (%.3f s", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                c.seconds);
    if (c.runtime_limit > 0.0) std::printf(", limit %.0f s", c.runtime_limit);
    std::printf(")\n");
    for (const auto& m : c.measurements) {
      std::printf("       %s %-44s measured %.10g target %.10g tol %s %.3g\n",
                  m.passed ? "ok  " : "FAIL", m.name.c_str(), m.measured, m.target,
                  kind_symbol(m.kind), m.tol);
    }
    if (!c.error.empty()) std::printf("       error: %s\n", c.error.c_str());
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
