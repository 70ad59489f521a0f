// Acceptance gate: one line per criterion.  Each criterion drives the
// verification suites (or the library directly) at the dimensions and window
// bounds it is specified for.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nct/verifier.hpp"

using namespace nct;

namespace {

int failures = 0;

SuiteConfig cfg(const std::string& suite, int n, int window,
                const std::string& fault = "") {
  SuiteConfig c;
  c.suite = suite;
  c.n = n;
  c.window = window;
  c.seed = 0;
  c.fault = fault;
  return c;
}

bool suite_passes(const std::string& suite, int n, int window,
                  std::string* why = nullptr) {
  VerificationReport r = run_suite(cfg(suite, n, window));
  if (!r.pass && why && !r.witnesses.empty()) *why = r.witnesses.front();
  return r.pass;
}

void criterion(int num, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), static_cast<long long>(ms), why.empty() ? "" : " -- ",
              why.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "kernel laws hold corpus-wide and injected defects are caught",
            [](std::string& why) {
              if (!suite_passes("kernel-laws", 3, 4, &why)) return false;
              VerificationReport f =
                  run_suite(cfg("kernel-laws", 3, 4, "accept-broken"));
              if (f.pass) {
                why = "fault injection not detected";
                return false;
              }
              return true;
            });

  criterion(2, "boundary gluings and the 3-simplex contraction push out "
               "correctly with universal cocones",
            [](std::string& why) { return suite_passes("pushout-calculus", 3, 4, &why); });

  criterion(3, "cell fiber products match their wedge decompositions "
               "cellwise and on hom-sets, all admissible parameters, n <= 3",
            [](std::string& why) {
              return suite_passes("fiber-decomposition", 1, 6, &why) &&
                     suite_passes("fiber-decomposition", 2, 6, &why) &&
                     suite_passes("fiber-decomposition", 3, 5, &why);
            });

  criterion(4, "gaunt nerves are local for the full generator window and "
               "the wedge/collapse generators genuinely cut it",
            [](std::string& why) {
              return suite_passes("gaunt-locality", 1, 4, &why) &&
                     suite_passes("gaunt-locality", 2, 4, &why);
            });

  criterion(5, "nerves are recognized and reconstructed in both indexings; "
               "non-nerves rejected with named witnesses",
            [](std::string& why) {
              return suite_passes("nerve-recognition", 1, 4, &why) &&
                     suite_passes("nerve-recognition", 2, 4, &why);
            });

  criterion(6, "window trees retract off grids compatibly with realization; "
               "the 2-simplex splits off the arrow square",
            [](std::string& why) {
              return suite_passes("grids-retracts", 2, 6, &why) &&
                     suite_passes("grids-retracts", 3, 5, &why);
            });

  criterion(7, "the cell window has exactly 2^n automorphisms, acting as "
               "(Z/2)^n, for n = 1, 2, 3",
            [](std::string& why) { return suite_passes("autos", 3, 4, &why); });

  criterion(8, "the bounded closure window contains the simplex chain and "
               "stabilizes",
            [](std::string& why) { return suite_passes("upsilon-closure", 1, 4, &why); });

  criterion(9, "multi-simplex and tree indexings agree on evaluations and "
               "restriction maps",
            [](std::string& why) {
              return suite_passes("delta-restriction", 1, 5, &why) &&
                     suite_passes("delta-restriction", 2, 5, &why);
            });

  criterion(10, "rendered reports are byte-identical across repeated runs",
            [](std::string& why) {
              for (const char* fmt : {"json", "text"}) {
                std::string a =
                    report_render(run_suite(cfg("s00-iso", 1, 4)), fmt);
                std::string b =
                    report_render(run_suite(cfg("s00-iso", 1, 4)), fmt);
                if (a.empty() || a != b) {
                  why = std::string("divergent ") + fmt + " reports";
                  return false;
                }
              }
              return true;
            });

  return failures == 0 ? 0 : 1;
}
