#pragma once

#include <string>
#include <vector>

#include "nct/ncat.hpp"

namespace nct {

// Configuration for one verification suite run.  `fault` names a documented
// developer switch that injects a defect so the suite must fail (guards
// against vacuous passes); empty means no injection.
struct SuiteConfig {
  std::string suite;
  int n = 2;
  int window = 4;      // size bound for test-object windows
  unsigned seed = 0;   // corpus randomization seed
  Budget budget = Budget::from_env();
  std::string fault;
};

// Machine-readable outcome.  All rendered fields are deterministic functions
// of the config; `work` counts elementary checks (the deterministic stand-in
// for timing, so identical configs yield byte-identical reports).
struct VerificationReport {
  std::string suite;
  std::string claim;  // plain-language statement of what was verified
  int n = 0;
  int window = 0;
  unsigned seed = 0;
  std::string fault;
  bool pass = false;
  std::vector<std::string> checks;     // one line per check, "ok ..." / "FAIL ..."
  std::vector<std::string> witnesses;  // failure details only
  long work = 0;                       // number of checks executed
  long elapsed_ms = 0;                 // wall clock; not rendered
};

// Suites: kernel-laws, pushout-calculus, fiber-decomposition, s00-iso,
// gaunt-locality, nerve-recognition, grids-retracts, autos, upsilon-closure,
// delta-restriction.  Throws InputError on an unknown suite or bad config.
VerificationReport run_suite(const SuiteConfig& cfg);

// Deterministic corpus for dimension cfg.n: cells, boundaries, the walking
// isomorphism and (n >= 2) its suspension, Delta^[2], C_1 x C_1, realized
// Theta_n window objects, and seeded random poset categories.  All validate.
std::vector<FiniteStrictNCat> corpus_generate(const SuiteConfig& cfg);

// The gaunt members of a corpus (drops E, sigma E, and anything else with a
// nonidentity invertible cell).
std::vector<FiniteStrictNCat> gaunt_corpus(
    const std::vector<FiniteStrictNCat>& corpus);

// format "json" or "text"; stable field ordering, deterministic bytes.
std::string report_render(const VerificationReport& r,
                          const std::string& format);

}  // namespace nct
