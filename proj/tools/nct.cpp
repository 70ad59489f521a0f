// nct: build standard objects, check gauntness, enumerate index trees, and
// run the verification suites.
//
// Exit codes: 0 success; 1 verification failure (or a non-gaunt input to
// `check gaunt`); 2 malformed input or usage; 3 resource bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nct/enumerate.hpp"
#include "nct/ncat.hpp"
#include "nct/standard.hpp"
#include "nct/theta.hpp"
#include "nct/verifier.hpp"

namespace {

nct::FiniteStrictNCat build_kind(const std::string& kind, int n, int k) {
  using namespace nct;
  if (k < 0) throw InputError("--k must be nonnegative");
  if (kind == "cell") {
    if (k > n) throw InputError("cell: need k <= n");
    return promote(cell(k), n);
  }
  if (kind == "boundary") {
    if (k > n) throw InputError("boundary: need k <= n");
    return promote(boundary(k), n);
  }
  if (kind == "simplex") return promote(simplex(k), std::max(n, 1));
  if (kind == "walking-iso") return promote(walking_iso(), std::max(n, 1));
  if (kind == "point") return point(n);
  throw InputError("unknown kind: " + kind);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nct::InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite strict n-category toolkit"};
  app.require_subcommand(1);

  std::string kind, out_file, in_file, suite, report_file, format = "json",
                                                           fault;
  int n = 2, k = 0, window = 4, max_size = 4;
  unsigned seed = 0;
  long long budget_override = 0;

  CLI::App* b = app.add_subcommand("build", "write a standard object as JSON");
  b->add_option("kind", kind, "cell|boundary|simplex|walking-iso|point")
      ->required();
  b->add_option("--n", n, "ambient dimension")->required();
  b->add_option("--k", k, "parameter (cell/boundary dimension, simplex size)");
  b->add_option("-o,--output", out_file, "output file")->required();

  CLI::App* c = app.add_subcommand("check", "check a property of a JSON object");
  std::string prop;
  c->add_option("property", prop, "gaunt")->required();
  c->add_option("file", in_file, "JSON input")->required();

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", suite, "suite name")->required();
  v->add_option("--n", n, "ambient dimension");
  v->add_option("--window", window, "test-object size bound");
  v->add_option("--budget", budget_override, "search-node budget override");
  v->add_option("--seed", seed, "corpus randomization seed");
  v->add_option("--report", report_file, "report output file");
  v->add_option("--format", format, "json|text");
  v->add_option("--fault", fault, "fault-injection switch (suite must fail)");

  CLI::App* e = app.add_subcommand("enum", "enumerate index objects");
  std::string what;
  e->add_option("what", what, "theta")->required();
  e->add_option("--n", n, "level")->required();
  e->add_option("--max-size", max_size, "tree size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*b) {
      std::ofstream os(out_file);
      if (!os) throw nct::InputError("cannot write " + out_file);
      os << nct::to_json(build_kind(kind, n, k));
      return 0;
    }
    if (*c) {
      if (prop != "gaunt") throw nct::InputError("unknown property: " + prop);
      nct::FiniteStrictNCat x = nct::ncat_from_json(slurp(in_file));
      nct::ValidationReport vr = nct::validate(x);
      if (!vr.ok) throw nct::InputError("input does not validate");
      nct::GauntReport g = nct::is_gaunt(x);
      if (g.gaunt) {
        std::cout << "gaunt\n";
        return 0;
      }
      std::cout << "not gaunt: " << g.witness_cell << " invertible at level "
                << g.level << "\n";
      return 1;
    }
    if (*v) {
      nct::SuiteConfig cfg;
      cfg.suite = suite;
      cfg.n = n;
      cfg.window = window;
      cfg.seed = seed;
      cfg.fault = fault;
      cfg.budget = nct::Budget::from_env();
      if (budget_override > 0) cfg.budget.max_search_nodes = budget_override;
      nct::VerificationReport rep = nct::run_suite(cfg);
      std::string rendered = nct::report_render(rep, format);
      if (!report_file.empty()) {
        std::ofstream os(report_file);
        if (!os) throw nct::InputError("cannot write " + report_file);
        os << rendered;
      } else {
        std::cout << rendered;
      }
      std::cerr << (rep.pass ? "PASS " : "FAIL ") << rep.suite << " ("
                << rep.work << " checks)\n";
      return rep.pass ? 0 : 1;
    }
    if (*e) {
      if (what != "theta") throw nct::InputError("unknown enumeration: " + what);
      for (const auto& o : nct::theta_enumerate_objects(n, max_size))
        std::cout << nct::theta_print(o) << "\n";
      return 0;
    }
  } catch (const nct::ResourceError& err) {
    std::cerr << "resource bound: " << err.what() << "\n";
    return 3;
  } catch (const nct::InputError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
