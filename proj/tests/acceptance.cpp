// Acceptance suite: runs every pinned criterion through the invariant suite
// and prints one pass/fail line per criterion. The determinism criterion
// reruns the whole suite under a different thread budget and requires a
// byte-identical report.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hyperball/suite.hpp"

using namespace hyperball;

int main() {
  setenv("HYPERBALL_THREADS", "2", 1);
  const SuiteReport report = run_suite(7);

  std::cout << report.serialize() << "\n";

  struct Criterion {
    std::string prefix;
    std::string name;
  };
  const std::vector<Criterion> criteria = {
      {"A1.", "group algebra: jacobian cocycle and form isometry"},
      {"A2.", "normal-form recovery through the normalizer"},
      {"A3.", "cylinder invariance of (phi, R) and the r multiplier"},
      {"A4.", "tangency of the quantized tori (with perturbed control)"},
      {"A5.", "loop integrals hit -3lm (and the radial loop an integer)"},
      {"A6.", "orthonormal basis, reproducing kernel, series closed form"},
      {"A7.", "coherent-state equivariance"},
      {"A8.", "residue constants: exact oracle and quadrature agreement"},
      {"A9.", "torus integral proportional to the seed"},
      {"A10.", "series: term invariance, degenerate case, convergence trend"},
  };

  bool all = true;
  int index = 1;
  for (const Criterion& c : criteria) {
    bool pass = true;
    bool found = false;
    for (const SuiteRow& r : report.rows)
      if (r.id.rfind(c.prefix, 0) == 0) {
        found = true;
        pass = pass && r.pass;
      }
    pass = pass && found;
    std::printf("CRITERION %2d %s: %s\n", index++, pass ? "PASS" : "FAIL", c.name.c_str());
    all = all && pass;
  }

  // determinism: identical report bytes under a different thread budget
  setenv("HYPERBALL_THREADS", "1", 1);
  const SuiteReport rerun = run_suite(7);
  const bool deterministic = rerun.serialize() == report.serialize();
  std::printf("CRITERION %2d %s: %s\n", index++, deterministic ? "PASS" : "FAIL",
              "byte-identical reports across runs and thread counts");
  all = all && deterministic;

  bool invariants = true;
  for (const SuiteRow& r : report.rows)
    if (r.id.rfind("I", 0) == 0) invariants = invariants && r.pass;
  std::printf("MODULE INVARIANTS %s\n", invariants ? "PASS" : "FAIL");
  all = all && invariants;

  std::printf("%s\n", all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
