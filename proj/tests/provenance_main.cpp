#include <cstdio>

#include "vdwx/oracle.hpp"

int main() {
  const auto checks = vdwx::provenance_checks();
  int failures = 0;
  for (const auto& c : checks) {
    std::printf("%-44s computed=% .17g reference=% .17g gap=%.3e tol=%.1e %s\n",
                c.name.c_str(), c.computed, c.reference, c.rel_gap, c.tol,
                c.pass ? "ok" : "FAIL");
    if (!c.pass) ++failures;
  }
  std::printf("%zu checks, %d failures\n", checks.size(), failures);
  return failures == 0 ? 0 : 1;
}
