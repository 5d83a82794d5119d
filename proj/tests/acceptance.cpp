// Acceptance gate: one line per criterion, pass/fail, nonzero exit on any
// failure. Each criterion is one verification suite plus, where stated, a
// wall-clock budget.

#include "shv/verify.hpp"

#include <iostream>

int main() {
  struct Criterion {
    const char* label;
    const char* suite;
    long long budget_ms;  // 0 = no budget
  };
  const Criterion criteria[] = {
      {" 1. decomposition round trip + splitting oracle", "decompose-roundtrip", 10000},
      {" 2. indecomposable count on two marked points", "gabriel-count", 0},
      {" 3. hom table vs quiver-level hom spaces", "hom-table", 0},
      {" 4. local-system cohomology vs cellwise oracle", "cohom-locsys", 0},
      {" 5. tensor of local systems vs Kronecker Jordan type", "tensor-jordan", 5000},
      {" 6. counting invariant vs Jordan data and c-map ranks", "loc-cst-comp", 0},
      {" 7. section gains in cokernels force a Jordan drop", "morph-elem0", 0},
      {" 8. Mayer-Vietoris twist and cocycle monodromy", "twist", 0},
      {" 9. duality involution and self-dual patterns", "duality", 0},
      {"10. linked points and wrapped endomorphism algebras", "linked-points", 0},
      {"11. microsupport sign table", "ss-signs", 0},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    shv::VerificationReport r = shv::run_suite(c.suite, 0, 1);
    bool ok = r.passed() && (c.budget_ms == 0 || r.millis <= c.budget_ms);
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.label << "  [" << r.cases << " cases, "
              << r.millis << " ms";
    if (c.budget_ms) std::cout << " / budget " << c.budget_ms << " ms";
    std::cout << "]\n";
    if (!r.passed())
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
        std::cout << "      counterexample: " << r.failures[i] << "\n";
  }
  return all_ok ? 0 : 1;
}
