#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nct/enumerate.hpp"
#include "nct/ncat.hpp"
#include "nct/presheaf.hpp"
#include "nct/standard.hpp"
#include "nct/theta.hpp"

using namespace nct;

namespace {

// nu C_1 u^{nu C_0} nu C_1: the spine, deliberately missing the composites.
CellularPresheaf spine2(Indexing ix, int n) {
  CellularPresheaf p;
  p.indexing = ix;
  p.n = n;
  FiniteStrictNCat c1 = promote(cell(1), n), c0 = point(n);
  p.atoms = {c1, c1, c0};
  p.edges.push_back({2, 0, from_point(c1, final_object(c1))});
  p.edges.push_back({2, 1, from_point(c1, initial_object(c1))});
  return p;
}

}  // namespace

TEST_CASE("index hom counts match the monotone-map oracle") {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          auto hom = index_hom(delta_test({a, b}), delta_test({c, d}));
          CHECK(static_cast<long>(hom.size()) ==
                binom(a + c + 1, a + 1) * binom(b + d + 1, b + 1));
        }
  // Theta indexing defers to theta_hom.
  CHECK(index_hom(theta_test(theta_parse("[1]")), theta_test(theta_parse("[2]")))
            .size() == theta_hom(theta_parse("[1]"), theta_parse("[2]")).size());
}

TEST_CASE("realized index morphisms compose functorially") {
  TestObject a = delta_test({1, 1}), b = delta_test({2, 1}), c = delta_test({1, 2});
  for (const auto& f : index_hom(a, b))
    for (const auto& g : index_hom(b, c)) {
      IndexMor gf = compose_index(a, b, c, g, f);
      FunctorMap lhs = realize_index_mor(a, c, gf);
      FunctorMap rhs =
          compose(realize_index_mor(b, c, g), realize_index_mor(a, b, f));
      CHECK(lhs.assignment == rhs.assignment);
    }
}

TEST_CASE("nerve evaluation counts functors") {
  // Oracle: the nerve of X at a test o is Fun(realize(o), X).
  FiniteStrictNCat d2 = simplex(2);
  CellularPresheaf nd2 = nerve(d2, Indexing::Delta);
  for (int m = 0; m <= 3; ++m)
    CHECK(evaluate(nd2, delta_test({m})).size() ==
          static_cast<int>(fun_enum(simplex(m), d2).size()));
  CellularPresheaf nc1 = nerve(cell(1), Indexing::Theta);
  CHECK(evaluate(nc1, theta_test(theta_parse("[2]"))).size() == 4);
  CHECK(evaluate(nd2, delta_test({2})).size() == 10);
}

TEST_CASE("the spine colimit is smaller than the simplex nerve") {
  CellularPresheaf sp = spine2(Indexing::Delta, 1);
  CHECK(evaluate(sp, delta_test({1})).size() == 5);   // 2 arrows + 3 objects
  CHECK(evaluate(sp, delta_test({2})).size() == 7);   // vs 10 for nu Delta^2
  CHECK(evaluate(nerve(simplex(2), Indexing::Delta), delta_test({2})).size() ==
        10);
  // The formal spine diagram evaluates to the same pushout of representables.
  FormalDiagram d;
  d.indexing = Indexing::Delta;
  d.n = 1;
  d.verts = {delta_test({1}), delta_test({1}), delta_test({0})};
  d.edges.push_back({2, 0, delta_index_mor({{1}})});
  d.edges.push_back({2, 1, delta_index_mor({{0}})});
  CHECK(evaluate_formal(d, delta_test({2})).size() == 7);
  CHECK(evaluate_formal(d, delta_test({1})).size() == 5);
  CHECK(evaluate_formal(d, delta_test({0})).size() == 3);
}

TEST_CASE("hom of nerves agrees with functor enumeration") {
  std::vector<FiniteStrictNCat> corpus = {point(1), cell(1), simplex(2),
                                          boundary(1)};
  for (const auto& a : corpus)
    for (const auto& x : corpus)
      CHECK(hom_nerve(nerve(a, Indexing::Delta), nerve(x, Indexing::Delta))
                .size() == fun_enum(a, x).size());
}

TEST_CASE("restrictions agree between the two indexings") {
  // The delta embedding realizes multi-indexes to the same categories the
  // Theta tests use, so evaluations and restriction maps must coincide.
  std::vector<FiniteStrictNCat> corpus = {promote(cell(2), 2),
                                          promote(simplex(2), 2),
                                          realize(theta_parse("[2;[1],[0]]")).cat};
  auto window = default_window(Indexing::Delta, 2, 5);
  for (const auto& x : corpus) {
    CellularPresheaf pd = nerve(x, Indexing::Delta);
    CellularPresheaf pt = nerve(x, Indexing::Theta);
    for (const auto& m : window) {
      TestObject t = theta_test(delta_obj(m.multi));
      CHECK(evaluate(pd, m).size() == evaluate(pt, t).size());
      CHECK(evaluate(pd, m).reps == evaluate(pt, t).reps);
    }
    // One nontrivial restriction both ways.
    TestObject d11 = delta_test({1, 1}), d21 = delta_test({2, 1});
    std::vector<std::vector<int>> cs = {{0, 2}, {0, 1}};
    auto rd = restriction(pd, d11, d21, delta_index_mor(cs));
    auto rt = restriction(pt, theta_test(delta_obj({1, 1})),
                          theta_test(delta_obj({2, 1})),
                          theta_index_mor(delta_mor({1, 1}, {2, 1}, cs)));
    CHECK(rd == rt);
  }
}

TEST_CASE("nerves of gaunt categories are Segal- and Comp-local at level 1") {
  std::vector<FiniteStrictNCat> corpus = {point(1), cell(1), simplex(2),
                                          simplex(3), boundary(1)};
  for (const auto& label : {"Segal_Delta", "Glob_Delta", "Comp_Delta"}) {
    GeneratorSet gs = build_generators(label, 1, 3);
    // Glob is empty at level 1: every 1-fold multi-index is its own hat.
    CHECK(gs.gens.empty() == (std::string(label) == "Glob_Delta"));
    for (const auto& x : corpus) {
      CellularPresheaf nx = nerve(x, Indexing::Delta);
      for (const auto& g : gs.gens) {
        LocalityResult r = is_local(nx, g);
        CHECK(r.local);
      }
    }
  }
}

TEST_CASE("the walking isomorphism fails Comp-locality with count 4 vs 2") {
  CellularPresheaf ne = nerve(walking_iso(), Indexing::Delta);
  for (const auto& g : build_generators("Segal_Delta", 1, 3).gens)
    CHECK(is_local(ne, g).local);
  GeneratorSet comp = build_generators("Comp_Delta", 1, 2);
  REQUIRE(!comp.gens.empty());
  LocalityResult r = is_local(ne, comp.gens.front());
  CHECK(!r.local);
  CHECK(r.dom_count == 4);  // both isomorphism directions contract the K-shape
  CHECK(r.cod_count == 2);
}

TEST_CASE("Glob generators use the outer-zero hat") {
  GeneratorSet gs = build_generators("Glob_Delta", 2, 3);
  std::set<std::string> clauses;
  for (const auto& g : gs.gens) clauses.insert(g.clause);
  // An inner coordinate collapses whenever any outer one is degenerate.
  CHECK(clauses.count("(3,0) -> (0,0)") == 1);
  CHECK(clauses.count("(0,3) -> (0,3)") == 0);  // already its own hat
  CHECK(clauses.count("(0,0) -> (0,0)") == 0);
  // The delta embedding realizes degenerate multi-indexes through their hat,
  // so cellular presheaves are automatically Glob-local.
  CHECK(realize_test(delta_test({3, 0})).size() == 1);
  CellularPresheaf nx = nerve(promote(simplex(2), 2), Indexing::Delta);
  for (const auto& g : gs.gens) CHECK(is_local(nx, g).local);
}

TEST_CASE("S00 has the expected clause census") {
  GeneratorSet s2 = build_generators("S00", 2, 0);
  CHECK(s2.gens.size() == 14);  // 3 (a) + 3 (b) + 5 (c) + 3 (d)
  int a = 0, b = 0, c = 0, d = 0;
  for (const auto& g : s2.gens) {
    CHECK(g.family == "S00");
    CHECK(!g.formal);
    if (g.clause.rfind("(a)", 0) == 0) ++a;
    if (g.clause.rfind("(b)", 0) == 0) ++b;
    if (g.clause.rfind("(c)", 0) == 0) ++c;
    if (g.clause.rfind("(d)", 0) == 0) ++d;
  }
  CHECK(a == 3);
  CHECK(b == 3);
  CHECK(c == 5);
  CHECK(d == 3);
  CHECK(build_generators("S00", 1, 0).gens.size() == 6);
}

TEST_CASE("S00 generators are well-formed cocones") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& g : build_generators("S00", n, 0).gens) {
      if (g.nmap.source.atoms.empty()) continue;
      for (size_t a = 0; a < g.nmap.source.atoms.size(); ++a) {
        const auto& m = g.nmap.atom_map[a];
        CHECK(m.source.n == n);
        CHECK(m.target.n == n);
        CHECK(is_functor(m.source, m.target, m.assignment));
      }
      for (const auto& e : g.nmap.source.edges) {
        CHECK(is_functor(e.map.source, e.map.target, e.map.assignment));
        // The legs commute with the gluing on the nose.
        const auto& mf = g.nmap.atom_map[e.from];
        const auto& mt = g.nmap.atom_map[e.to];
        for (size_t c = 0; c < mf.assignment.size(); ++c)
          CHECK(mf.assignment[c] == mt.assignment[e.map.assignment[c]]);
      }
    }
}

TEST_CASE("families (a) and (c) are evaluation bijections, (b) and (d) are not") {
  auto window1 = default_window(Indexing::Theta, 1, 4);
  for (const auto& g : build_generators("S00", 1, 0).gens) {
    EvalBijection eb = evaluation_bijective(g, window1);
    bool expected = g.clause.rfind("(a)", 0) == 0 || g.clause.rfind("(c)", 0) == 0;
    INFO(g.clause, " ", eb.witness);
    CHECK(eb.bijective == expected);
  }
  auto window2 = default_window(Indexing::Theta, 2, 4);
  int checked_b = 0, checked_d = 0;
  for (const auto& g : build_generators("S00", 2, 0).gens) {
    if (g.clause.rfind("(a)", 0) == 0) {
      CHECK(evaluation_bijective(g, window2).bijective);
    } else if (g.clause == "(c) i=0 j=1 k=1" || g.clause == "(c) i=1 j=1 k=1") {
      CHECK(evaluation_bijective(g, window2).bijective);
    } else if (g.clause == "(b) i=0 j=1") {
      CHECK(!evaluation_bijective(g, window2).bijective);
      ++checked_b;
    } else if (g.clause == "(d) k=0") {
      CHECK(!evaluation_bijective(g, window2).bijective);
      ++checked_d;
    }
  }
  CHECK(checked_b == 1);
  CHECK(checked_d == 1);
}

TEST_CASE("gaunt nerves are local for the full S0 window") {
  for (int n = 1; n <= 2; ++n) {
    GeneratorSet gs = build_generators("S0_window", n, 0);
    CHECK(gs.gens.size() > build_generators("S00", n, 0).gens.size());
    std::vector<FiniteStrictNCat> corpus = {point(n), promote(cell(1), n),
                                            promote(simplex(2), n),
                                            promote(boundary(1), n)};
    if (n == 2) {
      corpus.push_back(cell(2));
      corpus.push_back(boundary(2));
      corpus.push_back(realize(theta_parse("[2;[1],[0]]")).cat);
    }
    for (const auto& x : corpus) {
      CellularPresheaf nx = nerve(x, Indexing::Theta);
      for (const auto& g : gs.gens) {
        LocalityResult r = is_local(nx, g);
        INFO(g.family, " ", g.clause, " on |X|=", x.size(), ": ", r.witness);
        CHECK(r.local);
      }
    }
  }
}

TEST_CASE("transported generators keep fiber-product shape") {
  GeneratorSet gs = build_generators("S0_window", 2, 0);
  int transports = 0;
  for (const auto& g : gs.gens)
    if (g.family == "S0_window") {
      ++transports;
      for (const auto& m : g.nmap.atom_map)
        CHECK(is_functor(m.source, m.target, m.assignment));
    }
  CHECK(transports >= 7);  // (b) x3 and (d) x3 over C_0, one (b) over C_1
}

TEST_CASE("Theta Segal and Comp generator families hold on gaunt nerves") {
  GeneratorSet seg = build_generators("Segal_Theta", 2, 4);
  GeneratorSet cmp = build_generators("Comp_Theta", 2, 0);
  CHECK(!seg.gens.empty());
  CHECK(cmp.gens.size() == 2);  // iota(K) at level 2 and its suspension
  std::vector<FiniteStrictNCat> corpus = {cell(2), promote(simplex(2), 2),
                                          realize(theta_parse("[2;[1],[0]]")).cat};
  for (const auto& x : corpus) {
    CellularPresheaf nx = nerve(x, Indexing::Theta);
    for (const auto& g : seg.gens) CHECK(is_local(nx, g).local);
    for (const auto& g : cmp.gens) CHECK(is_local(nx, g).local);
  }
  CellularPresheaf ne = nerve(promote(walking_iso(), 2), Indexing::Theta);
  bool some_comp_fails = false;
  for (const auto& g : cmp.gens)
    if (!is_local(ne, g).local) some_comp_fails = true;
  CHECK(some_comp_fails);
}

TEST_CASE("recognition round-trips nerves in both indexings") {
  auto wd = default_window(Indexing::Delta, 1, 5);
  RecognitionResult r1 =
      recognize_gaunt_nerve(nerve(simplex(2), Indexing::Delta), wd, 3);
  INFO(r1.witness);
  REQUIRE(r1.accepted);
  CHECK(is_iso(r1.reconstruction, simplex(2)));

  auto wt = default_window(Indexing::Theta, 2, 4);
  RecognitionResult r2 =
      recognize_gaunt_nerve(nerve(cell(2), Indexing::Theta), wt, 4);
  INFO(r2.witness);
  REQUIRE(r2.accepted);
  CHECK(is_iso(r2.reconstruction, cell(2)));

  RecognitionResult r3 = recognize_gaunt_nerve(
      nerve(realize(theta_parse("[2;[1],[0]]")).cat, Indexing::Theta), wt, 4);
  REQUIRE(r3.accepted);
  CHECK(is_iso(r3.reconstruction, realize(theta_parse("[2;[1],[0]]")).cat));
}

TEST_CASE("recognition rejects the walking isomorphism and a Segal fault") {
  auto wd = default_window(Indexing::Delta, 1, 4);
  RecognitionResult re =
      recognize_gaunt_nerve(nerve(walking_iso(), Indexing::Delta), wd, 3);
  CHECK(!re.accepted);
  CHECK(re.witness.find("Comp") != std::string::npos);

  RecognitionResult rs = recognize_gaunt_nerve(spine2(Indexing::Delta, 1), wd, 3);
  CHECK(!rs.accepted);
  CHECK(rs.witness.find("Segal") != std::string::npos);
}

TEST_CASE("evaluation is deterministic") {
  CellularPresheaf p = nerve(simplex(2), Indexing::Delta);
  const EvalSet& a = evaluate(p, delta_test({2}));
  const EvalSet& b = evaluate(p, delta_test({2}));
  CHECK(a.reps == b.reps);
  auto r1 = restriction(p, delta_test({1}), delta_test({2}),
                        delta_index_mor({{0, 2}}));
  auto r2 = restriction(p, delta_test({1}), delta_test({2}),
                        delta_index_mor({{0, 2}}));
  CHECK(r1 == r2);
}
