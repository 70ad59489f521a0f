#include "nct/verifier.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nct/colimit.hpp"
#include "nct/enumerate.hpp"
#include "nct/presheaf.hpp"
#include "nct/standard.hpp"
#include "nct/symmetry.hpp"
#include "nct/theta.hpp"

namespace nct {
namespace {

FunctorMap sig(FunctorMap f, int i) {
  while (i-- > 0) f = suspension(f);
  return f;
}

// Check accumulator: one line per check, witnesses on failure only.  `work`
// is the deterministic stand-in for timing in rendered reports.
struct Ctx {
  const SuiteConfig& cfg;
  VerificationReport& r;

  void check(bool ok, const std::string& what, const std::string& detail = "") {
    ++r.work;
    if (ok) {
      r.checks.push_back("ok " + what);
    } else {
      r.checks.push_back("FAIL " + what);
      r.witnesses.push_back(detail.empty() ? what : what + ": " + detail);
      r.pass = false;
    }
  }
};

// A poset category on s points with seeded random order relations; every
// pair i < j gets an arrow with probability 1/2, transitively closed.
FiniteStrictNCat random_poset(std::mt19937& rng, int s, int n) {
  std::vector<std::vector<bool>> le(s, std::vector<bool>(s, false));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) le[i][j] = (rng() & 1u) != 0;
  for (int k = 0; k < s; ++k)  // transitive closure
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;

  FiniteStrictNCat x;
  x.n = 1;
  std::vector<std::vector<int>> arrow(s, std::vector<int>(s, -1));
  for (int i = 0; i < s; ++i) x.cells.push_back("p" + std::to_string(i));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (le[i][j]) {
        arrow[i][j] = x.size();
        x.cells.push_back("a" + std::to_string(i) + "-" + std::to_string(j));
      }
  CatStructure st;
  st.src.assign(x.size(), 0);
  st.tgt.assign(x.size(), 0);
  for (int i = 0; i < s; ++i) st.src[i] = st.tgt[i] = i;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (arrow[i][j] >= 0) {
        st.src[arrow[i][j]] = i;
        st.tgt[arrow[i][j]] = j;
      }
  for (int c = 0; c < x.size(); ++c) {
    st.comp[{c, st.src[c]}] = c;
    st.comp[{st.tgt[c], c}] = c;
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k)
        if (arrow[i][j] >= 0 && arrow[j][k] >= 0)
          st.comp[{arrow[j][k], arrow[i][j]}] = arrow[i][k];
  x.structures.push_back(std::move(st));
  FiniteStrictNCat p = promote(x, n);
  require_valid(p, "random_poset");
  return p;
}

std::vector<FiniteStrictNCat> size_capped(
    const std::vector<FiniteStrictNCat>& corpus, int cap) {
  std::vector<FiniteStrictNCat> out;
  for (const auto& x : corpus)
    if (x.size() <= cap) out.push_back(x);
  return out;
}

Generator drop_glue(Generator g) {
  g.nmap.source.atoms.pop_back();
  g.nmap.source.edges.clear();
  g.nmap.atom_target.pop_back();
  g.nmap.atom_map.pop_back();
  g.clause += " [glue dropped]";
  return g;
}

// The spine colimit nu(C_1) u^{nu(C_0)} nu(C_1): a presheaf that satisfies
// everything except the spine conditions; recognition must reject it.
CellularPresheaf spine_presheaf(Indexing indexing, int n) {
  CellularPresheaf p;
  p.indexing = indexing;
  p.n = n;
  FiniteStrictNCat c1 = promote(cell(1), n), c0 = point(n);
  p.atoms = {c1, c1, c0};
  p.edges.push_back({2, 0, from_point(c1, final_object(c1))});
  p.edges.push_back({2, 1, from_point(c1, initial_object(c1))});
  return p;
}

void suite_kernel_laws(Ctx& c) {
  auto corpus = corpus_generate(c.cfg);
  for (size_t i = 0; i < corpus.size(); ++i) {
    ValidationReport vr = validate(corpus[i]);
    std::string detail;
    if (!vr.ok && !vr.violations.empty())
      detail = vr.violations.front().axiom + ": " + vr.violations.front().detail;
    c.check(vr.ok,
            "corpus[" + std::to_string(i) + "] (" +
                std::to_string(corpus[i].size()) + " cells) validates",
            detail);
  }

  // Injected defects: each mutation must be caught with a concrete witness.
  bool want_ok = c.cfg.fault == "accept-broken";
  auto expect_broken = [&](FiniteStrictNCat x, const std::string& what) {
    ValidationReport vr = validate(x);
    bool caught = !vr.ok && !vr.violations.empty() &&
                  !vr.violations.front().witness.empty();
    c.check(caught == !want_ok, what,
            vr.ok ? "no violation reported" : vr.violations.front().axiom);
  };
  {
    FiniteStrictNCat x = cell(1);  // tgt of the arrow made non-idempotent
    x.structures[0].tgt[x.index_of("pt")] = x.index_of("pt");
    expect_broken(x, "broken boundary idempotency is caught");
  }
  {
    FiniteStrictNCat x = walking_iso();  // composite with the wrong boundary
    int f = x.index_of("f"), g = x.index_of("g"), y = x.index_of("y");
    x.structures[0].comp[{g, f}] = y;
    expect_broken(x, "composite with wrong boundary is caught");
  }
  {
    FiniteStrictNCat x = simplex(2);  // composition table made non-associative
    int a = x.index_of("0-1"), b = x.index_of("1-2");
    x.structures[0].comp[{b, a}] = a;
    expect_broken(x, "corrupted composition table is caught");
  }
}

void suite_pushout_calculus(Ctx& c) {
  bool perturb = c.cfg.fault == "perturb";
  std::vector<FiniteStrictNCat> tests;
  for (int j = 0; j <= std::max(c.cfg.n, 1); ++j) tests.push_back(cell(j));

  for (int k = 1; k <= std::min(std::max(c.cfg.n, 1), 3); ++k) {
    FiniteStrictNCat ck = cell(k - 1), bk = boundary(k - 1);
    std::vector<int> inc(bk.size());
    for (int x = 0; x < bk.size(); ++x) inc[x] = ck.index_of(bk.cells[x]);
    FunctorMap bi{bk, ck, inc};
    SpanDiagram d{bk, bi, bi};
    PushoutResult p = pushout(d, c.cfg.budget);
    FiniteStrictNCat expected = perturb ? cell(k) : boundary(k);
    c.check(is_iso(p.result, expected, nullptr, c.cfg.budget),
            "gluing two " + std::to_string(k - 1) +
                "-cells along their boundary yields the " +
                std::to_string(k) + "-boundary",
            std::to_string(p.result.size()) + " cells");
    std::string w;
    c.check(verify_cocone_universal(d, p, tests, &w, c.cfg.budget),
            "boundary gluing cocone is universal at k=" + std::to_string(k), w);
  }

  SpanDiagram ks = k_span();
  PushoutResult p = pushout(ks, c.cfg.budget);
  FiniteStrictNCat expected = perturb ? simplex(3) : walking_iso();
  c.check(is_iso(p.result, expected, nullptr, c.cfg.budget),
          "contracting two edges of the 3-simplex yields the walking "
          "isomorphism",
          std::to_string(p.result.size()) + " cells");
  std::string w;
  c.check(verify_cocone_universal(ks, p, {cell(0), cell(1)}, &w, c.cfg.budget),
          "3-simplex contraction cocone is universal", w);
}

void suite_fiber_decomposition(Ctx& c) {
  int n = c.cfg.n;
  GeneratorSet gs = build_generators("S00", n, 0);
  auto window = default_window(Indexing::Theta, n, c.cfg.window);
  bool dropped = false;
  for (const auto& g : gs.gens) {
    int i, j, k;
    if (std::sscanf(g.clause.c_str(), "(c) i=%d j=%d k=%d", &i, &j, &k) != 3)
      continue;
    // Cellwise form: C_{i+j} x_{C_i} C_{i+k} = sigma^i(C_j x C_k).
    int a = std::max(j, k);
    FunctorMap f = promote(sig(to_point(promote(cell(j), a)), i), n);
    FunctorMap gmap = promote(sig(to_point(promote(cell(k), a)), i), n);
    FiniteStrictNCat q = fiber_product(f, gmap);
    c.check(is_iso(q, g.nmap.target.atoms[0], nullptr, c.cfg.budget),
            "cellwise fiber product matches " + g.clause,
            std::to_string(q.size()) + " vs " +
                std::to_string(g.nmap.target.atoms[0].size()) + " cells");

    // The decomposition pushout of the two endpoint wedges over the glued
    // suspension recovers the fiber product on the nose.
    SpanDiagram d{g.nmap.source.atoms[2], g.nmap.source.edges[0].map,
                  g.nmap.source.edges[1].map};
    PushoutResult p = pushout(d, c.cfg.budget);
    c.check(is_iso(p.result, g.nmap.target.atoms[0], nullptr, c.cfg.budget),
            "decomposition pushout matches " + g.clause,
            std::to_string(p.result.size()) + " cells");
    auto co = induced_map(p, g.nmap.atom_map[0], g.nmap.atom_map[1]);
    bool bij = false;
    if (co) {
      std::set<int> img(co->assignment.begin(), co->assignment.end());
      bij = static_cast<int>(img.size()) == p.result.size() &&
            p.result.size() == co->target.size();
    }
    c.check(bij, "cocone comparison map is invertible for " + g.clause);

    Generator h = g;
    if (c.cfg.fault == "drop-glue" && !dropped) {
      h = drop_glue(h);
      dropped = true;
    }
    EvalBijection eb = evaluation_bijective(h, window, c.cfg.budget);
    c.check(eb.bijective, "window hom comparison exact for " + h.clause,
            eb.witness);
  }
}

void suite_s00_iso(Ctx& c) {
  GeneratorSet gs = build_generators("S00", c.cfg.n, 0);
  auto window = default_window(Indexing::Theta, c.cfg.n, c.cfg.window);
  bool dropped = false, nonbij_b = false, nonbij_d = false;
  for (const auto& g : gs.gens) {
    char letter = g.clause.size() > 1 ? g.clause[1] : '?';
    if (letter == 'a' || letter == 'c') {
      Generator h = g;
      if (c.cfg.fault == "drop-glue" && letter == 'c' && !dropped) {
        h = drop_glue(h);
        dropped = true;
      }
      EvalBijection eb = evaluation_bijective(h, window, c.cfg.budget);
      c.check(eb.bijective, "evaluation bijection for " + h.clause, eb.witness);
    } else {
      EvalBijection eb = evaluation_bijective(g, window, c.cfg.budget);
      (letter == 'b' ? nonbij_b : nonbij_d) |= !eb.bijective;
    }
  }
  c.check(nonbij_b,
          "some endpoint-wedge instance is not an evaluation bijection");
  c.check(nonbij_d,
          "some invertible-collapse instance is not an evaluation bijection");
}

void suite_gaunt_locality(Ctx& c) {
  int n = c.cfg.n;
  GeneratorSet gs = build_generators("S0_window", n, 0);
  auto corpus = size_capped(gaunt_corpus(corpus_generate(c.cfg)), 10);
  if (c.cfg.fault == "include-nongaunt")
    corpus.push_back(promote(walking_iso(), n));
  for (size_t i = 0; i < corpus.size(); ++i) {
    CellularPresheaf nx = nerve(corpus[i], Indexing::Theta);
    for (const auto& g : gs.gens) {
      LocalityResult lr = is_local(nx, g, c.cfg.budget);
      c.check(lr.local,
              "corpus[" + std::to_string(i) + "] local for " + g.family + " " +
                  g.clause,
              lr.witness);
    }
  }
  // Non-vacuity: the wedge and collapse families genuinely cut the window.
  auto window = default_window(Indexing::Theta, n, std::min(c.cfg.window, 4));
  bool nonbij_b = false, nonbij_d = false;
  for (const auto& g : gs.gens) {
    if (g.family != "S00" || g.clause.size() < 2) continue;
    char letter = g.clause[1];
    if (letter != 'b' && letter != 'd') continue;
    EvalBijection eb = evaluation_bijective(g, window, c.cfg.budget);
    (letter == 'b' ? nonbij_b : nonbij_d) |= !eb.bijective;
  }
  c.check(nonbij_b, "an endpoint-wedge generator is not a window bijection");
  c.check(nonbij_d, "an invertible-collapse generator is not a window bijection");
}

void suite_nerve_recognition(Ctx& c) {
  int n = c.cfg.n;
  auto corpus = size_capped(gaunt_corpus(corpus_generate(c.cfg)), 12);
  for (Indexing idx : {Indexing::Delta, Indexing::Theta}) {
    auto window = default_window(idx, n, std::min(c.cfg.window, 4));
    const char* name = idx == Indexing::Delta ? "multi-simplex" : "tree";
    for (size_t i = 0; i < corpus.size(); ++i) {
      RecognitionResult res =
          recognize_gaunt_nerve(nerve(corpus[i], idx), window, 3, c.cfg.budget);
      bool good = res.accepted &&
                  is_iso(res.reconstruction, corpus[i], nullptr, c.cfg.budget);
      c.check(good,
              std::string("recognizes corpus[") + std::to_string(i) + "] (" +
                  name + " indexing)",
              res.witness);
    }
  }
  auto window = default_window(Indexing::Theta, n, std::min(c.cfg.window, 4));
  {
    RecognitionResult res = recognize_gaunt_nerve(
        nerve(promote(walking_iso(), n), Indexing::Theta), window, 3,
        c.cfg.budget);
    bool want_accept = c.cfg.fault == "accept-nongaunt";
    bool good = want_accept
                    ? res.accepted
                    : !res.accepted && res.witness.find("Comp") != std::string::npos;
    c.check(good, "rejects the walking isomorphism with a composition witness",
            res.witness);
  }
  {
    RecognitionResult res = recognize_gaunt_nerve(
        spine_presheaf(Indexing::Theta, n), window, 3, c.cfg.budget);
    c.check(!res.accepted && res.witness.find("Segal") != std::string::npos,
            "rejects the unglued spine with a spine-condition witness",
            res.witness);
  }
}

void suite_grids_retracts(Ctx& c) {
  bool skew = c.cfg.fault == "skew-retraction";
  for (const auto& o : theta_enumerate_objects(c.cfg.n, c.cfg.window)) {
    GridRetract gr = grid_retract(o);
    c.check(theta_valid_mor(gr.section) && theta_valid_mor(gr.retraction) &&
                gr.section.cod == delta_obj(gr.grid),
            "grid presentation well formed for " + theta_print(o));
    ThetaMor rs = skew ? theta_compose(gr.section, gr.retraction)
                       : theta_compose(gr.retraction, gr.section);
    const ThetaObj& at = skew ? gr.section.cod : o;
    c.check(rs == theta_identity(at),
            "retraction splits the section for " + theta_print(o));
    FunctorMap real = compose(realize_mor(gr.retraction),
                              realize_mor(gr.section));
    c.check(real.assignment == identity_functor(realize(o).cat).assignment,
            "realized retraction is the identity on " + theta_print(o));
  }
  bool has_simplex = false;
  for (const auto& cert : retracts_of(product(cell(1), cell(1)), c.cfg.budget))
    if (is_iso(cert.splitting, simplex(2), nullptr, c.cfg.budget))
      has_simplex = true;
  c.check(has_simplex, "the 2-simplex is a retract of the arrow square");
}

void suite_autos(Ctx& c) {
  int top = std::min(std::max(c.cfg.n, 1), 3);
  for (int k = 1; k <= top; ++k) {
    auto autos = autos_of_globular(k, c.cfg.budget);
    int expected = 1 << (c.cfg.fault == "shrink-window" && k == top ? k + 1 : k);
    c.check(static_cast<int>(autos.size()) == expected,
            "window has 2^" + std::to_string(k) +
                " invertible endofunctors at level " + std::to_string(k),
            std::to_string(autos.size()) + " found");
    std::set<std::vector<bool>> flips;
    for (const auto& a : autos) flips.insert(a.flips);
    c.check(flips.size() == autos.size(),
            "each automorphism matches a distinct direction reversal at level " +
                std::to_string(k));
  }
  RIGroupReport rep = verify_rI_group(c.cfg.n, corpus_generate(c.cfg));
  c.check(rep.group_law_ok, "direction reversals compose like (Z/2)^n",
          rep.witness);
  c.check(rep.gaunt_preserved, "direction reversals preserve gauntness",
          rep.witness);
  c.check(rep.distinct_witnessed,
          "distinct reversals act differently on a realized tree", rep.witness);
}

void suite_upsilon_closure(Ctx& c) {
  int rounds = c.cfg.fault == "starve-rounds" ? 1 : 3;
  auto pool = upsilon_window(1, 15, rounds, c.cfg.budget);
  for (int m = 0; m <= 4; ++m) {
    bool found = false;
    for (const auto& x : pool)
      if (is_iso(x, simplex(m), nullptr, c.cfg.budget)) found = true;
    c.check(found, "closure window contains the " + std::to_string(m) +
                       "-simplex");
  }
  bool bounded = true, gaunt = true;
  for (const auto& x : pool) {
    bounded &= x.size() <= 15;
    gaunt &= is_gaunt(x, c.cfg.budget).gaunt;
  }
  c.check(bounded, "every closure member respects the size bound");
  c.check(gaunt, "every closure member is gaunt");
  auto p2 = upsilon_window(1, 3, 2, c.cfg.budget);
  auto p3 = upsilon_window(1, 3, 3, c.cfg.budget);
  c.check(p2.size() == p3.size(), "closure reaches a fixed point at bound 3",
          std::to_string(p2.size()) + " vs " + std::to_string(p3.size()));
}

void suite_delta_restriction(Ctx& c) {
  int n = c.cfg.n;
  auto corpus = size_capped(corpus_generate(c.cfg), 10);
  auto wins = default_window(Indexing::Delta, n, std::min(c.cfg.window, 5));
  for (size_t i = 0; i < corpus.size(); ++i) {
    CellularPresheaf nd = nerve(corpus[i], Indexing::Delta);
    CellularPresheaf nt = nerve(corpus[i], Indexing::Theta);
    auto tree_of = [&](const std::vector<int>& m) {
      std::vector<int> mm = m;
      if (c.cfg.fault == "transpose-coords") std::reverse(mm.begin(), mm.end());
      return theta_test(delta_obj(mm));
    };
    bool counts_ok = true, rests_ok = true;
    std::string cw, rw;
    for (const auto& t : wins) {
      const EvalSet& ed = evaluate(nd, t, c.cfg.budget);
      const EvalSet& et = evaluate(nt, tree_of(t.multi), c.cfg.budget);
      if (ed.size() != et.size() || ed.reps != et.reps) {
        counts_ok = false;
        if (cw.empty())
          cw = test_print(t) + ": " + std::to_string(ed.size()) + " vs " +
               std::to_string(et.size());
      }
    }
    for (const auto& t1 : wins)
      for (const auto& t2 : wins) {
        auto homs = index_hom(t1, t2);
        if (homs.size() > 20) homs.resize(20);
        for (const auto& g : homs) {
          auto rd = restriction(nd, t1, t2, g, c.cfg.budget);
          ThetaMor gt = delta_mor(t1.multi, t2.multi, g.coords);
          if (c.cfg.fault == "transpose-coords") continue;  // no tree analogue
          auto rt = restriction(nt, tree_of(t1.multi), tree_of(t2.multi),
                                theta_index_mor(gt), c.cfg.budget);
          if (rd != rt) {
            rests_ok = false;
            if (rw.empty()) rw = test_print(t1) + " -> " + test_print(t2);
          }
        }
      }
    c.check(counts_ok,
            "evaluation sets agree across indexings on corpus[" +
                std::to_string(i) + "]",
            cw);
    c.check(rests_ok,
            "restriction maps agree across indexings on corpus[" +
                std::to_string(i) + "]",
            rw);
  }
}

const std::map<std::string, std::pair<void (*)(Ctx&), const char*>>& suites() {
  static const std::map<std::string, std::pair<void (*)(Ctx&), const char*>>
      table = {
          {"kernel-laws",
           {suite_kernel_laws,
            "every corpus object satisfies the single-sorted axioms and "
            "injected defects are caught with witnesses"}},
          {"pushout-calculus",
           {suite_pushout_calculus,
            "boundary gluings and the 3-simplex contraction compute the "
            "expected colimits with universal cocones"}},
          {"fiber-decomposition",
           {suite_fiber_decomposition,
            "fiber products of cells over cells match their wedge "
            "decompositions cellwise and on window hom-sets"}},
          {"s00-iso",
           {suite_s00_iso,
            "the boundary and product-decomposition generators are "
            "evaluation bijections on the window; the wedge and collapse "
            "generators are not"}},
          {"gaunt-locality",
           {suite_gaunt_locality,
            "nerves of gaunt corpus objects are local for the full "
            "generator window including fiber-product transports"}},
          {"nerve-recognition",
           {suite_nerve_recognition,
            "gaunt nerves are recognized and reconstructed up to "
            "isomorphism in both indexings; non-nerves are rejected with "
            "named witnesses"}},
          {"grids-retracts",
           {suite_grids_retracts,
            "every window tree retracts off its grid presentation, "
            "compatibly with realization"}},
          {"autos",
           {suite_autos,
            "the cell window has exactly the 2^n direction-reversal "
            "automorphisms, acting as (Z/2)^n"}},
          {"upsilon-closure",
           {suite_upsilon_closure,
            "the bounded retract-and-fiber-product closure contains the "
            "simplex chain and stabilizes"}},
          {"delta-restriction",
           {suite_delta_restriction,
            "multi-simplex and tree indexings give the same evaluations "
            "and restriction maps on nerves"}},
      };
  return table;
}

}  // namespace

std::vector<FiniteStrictNCat> corpus_generate(const SuiteConfig& cfg) {
  int n = std::max(cfg.n, 1);
  std::vector<FiniteStrictNCat> out;
  auto add = [&](const FiniteStrictNCat& x) {
    for (const auto& y : out)
      if (y.size() == x.size() && is_iso(y, x, nullptr, cfg.budget)) return;
    out.push_back(x);
  };
  for (int k = 0; k <= n; ++k) add(promote(cell(k), n));
  for (int k = 1; k <= n; ++k) add(promote(boundary(k), n));
  add(promote(walking_iso(), n));
  if (n >= 2) add(promote(suspension(walking_iso()), n));
  add(promote(simplex(2), n));
  add(promote(product(cell(1), cell(1)), n));
  for (const auto& o : theta_enumerate_objects(n, std::min(cfg.window, 4)))
    add(realize(o).cat);
  std::mt19937 rng(cfg.seed);
  for (int t = 0; t < 3; ++t)
    add(random_poset(rng, 3 + static_cast<int>(rng() % 3u), n));
  return out;
}

std::vector<FiniteStrictNCat> gaunt_corpus(
    const std::vector<FiniteStrictNCat>& corpus) {
  std::vector<FiniteStrictNCat> out;
  for (const auto& x : corpus)
    if (is_gaunt(x).gaunt) out.push_back(x);
  return out;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  auto it = suites().find(cfg.suite);
  if (it == suites().end()) throw InputError("unknown suite: " + cfg.suite);
  if (cfg.n < 1 || cfg.n > 6) throw InputError("dimension out of range");
  if (cfg.window < 1) throw InputError("window bound must be positive");

  VerificationReport r;
  r.suite = cfg.suite;
  r.claim = it->second.second;
  r.n = cfg.n;
  r.window = cfg.window;
  r.seed = cfg.seed;
  r.fault = cfg.fault;
  r.pass = true;
  Ctx ctx{cfg, r};
  it->second.first(ctx);
  return r;
}

std::string report_render(const VerificationReport& r,
                          const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["claim"] = r.claim;
    j["n"] = r.n;
    j["window"] = r.window;
    j["seed"] = r.seed;
    j["fault"] = r.fault;
    j["pass"] = r.pass;
    j["checks"] = r.checks;
    j["witnesses"] = r.witnesses;
    j["work"] = r.work;
    return j.dump(2) + "\n";
  }
  if (format != "text") throw InputError("unknown report format: " + format);
  std::ostringstream os;
  os << "suite: " << r.suite << "\n"
     << "claim: " << r.claim << "\n"
     << "n: " << r.n << "  window: " << r.window << "  seed: " << r.seed
     << "\n";
  if (!r.fault.empty()) os << "fault: " << r.fault << "\n";
  os << "result: " << (r.pass ? "PASS" : "FAIL") << "\n"
     << "work: " << r.work << "\n";
  for (const auto& line : r.checks) os << "  " << line << "\n";
  if (!r.witnesses.empty()) {
    os << "witnesses:\n";
    for (const auto& w : r.witnesses) os << "  " << w << "\n";
  }
  return os.str();
}

}  // namespace nct
