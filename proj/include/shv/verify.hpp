#pragma once

// Lemma-verification runner: property grids cross-checking the closed-form
// calculus against brute-force oracles on quiver models. Each suite is a
// pure grid evaluation; failures carry the exact parameter tuple so a
// counterexample can be replayed from the command line.

#include <cstdint>
#include <string>
#include <vector>

namespace shv {

struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // one reproducible parameter tuple each
  long long millis = 0;

  bool passed() const { return failures.empty(); }
};

// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

// grid_size scales the parameter grid where the suite has one (0 = suite
// default); seed fixes the randomized suites.
VerificationReport run_suite(const std::string& suite, std::size_t grid_size, std::uint64_t seed);

std::vector<VerificationReport> run_all_suites(std::size_t grid_size, std::uint64_t seed);

}  // namespace shv
