#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "nct/enumerate.hpp"
#include "nct/ncat.hpp"
#include "nct/standard.hpp"
#include "nct/theta.hpp"

using namespace nct;

TEST_CASE("grammar round-trips and rejects malformed input") {
  for (const char* t : {"[0]", "[3]", "[0;]", "[2;[0],[1]]",
                        "[2;[1;[2]],[0;]]", "[3;[0;],[2;[1],[0]],[0;]]"}) {
    ThetaObj o = theta_parse(t);
    CHECK(theta_print(o) == t);
    CHECK(theta_parse(theta_print(o)) == o);
  }
  CHECK(theta_parse(" [ 2 ; [0] , [1] ] ") == theta_parse("[2;[0],[1]]"));
  CHECK_THROWS_AS(theta_parse("[2;[0]]"), InputError);       // missing child
  CHECK_THROWS_AS(theta_parse("[1;[0],[0]]"), InputError);   // extra child
  CHECK_THROWS_AS(theta_parse("[1;[0],"), InputError);
  CHECK_THROWS_AS(theta_parse("[2;[0],[1;[0]]]"), InputError);  // mixed levels
  CHECK_THROWS_AS(theta_parse("[1] junk"), InputError);
}

TEST_CASE("sizes, cells, and basic building blocks") {
  CHECK(theta_size(theta_parse("[3]")) == 4);
  CHECK(theta_size(theta_parse("[2;[1],[0]]")) == 4);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      ThetaObj t = cell_tree(n, k);
      CHECK(t.level == n);
      CHECK(theta_size(t) == k + 1);
    }
  CHECK(sigma_obj(theta_parse("[2]")) == theta_parse("[1;[2]]"));
  CHECK(iota_obj(2, 2) == theta_parse("[2;[0],[0]]"));
  CHECK(cell_tree(2, 2) == theta_parse("[1;[1]]"));
  CHECK(delta_obj({1, 2}) == theta_parse("[2;[1],[1]]"));
  CHECK(delta_obj({3}) == theta_parse("[3]"));
}

TEST_CASE("object enumeration is complete and duplicate-free") {
  auto level1 = theta_enumerate_objects(1, 4);
  CHECK(level1.size() == 4);  // [0]..[3]
  auto level2 = theta_enumerate_objects(2, 4);
  CHECK(level2.size() == 8);
  std::set<ThetaObj> seen(level2.begin(), level2.end());
  CHECK(seen.size() == level2.size());
  for (const auto& o : level2) {
    CHECK(o.level == 2);
    CHECK(theta_size(o) <= 4);
  }
  // Independent membership spot checks.
  CHECK(seen.count(theta_parse("[2;[1],[0]]")) == 1);
  CHECK(seen.count(theta_parse("[3;[0],[0],[0]]")) == 1);
  CHECK(seen.count(theta_parse("[1;[2]]")) == 1);
}

TEST_CASE("category laws: identity, composition, associativity") {
  auto objs = theta_enumerate_objects(2, 3);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      for (const auto& f : theta_hom(a, b)) {
        CHECK(theta_valid_mor(f));
        CHECK(theta_compose(f, theta_identity(a)) == f);
        CHECK(theta_compose(theta_identity(b), f) == f);
      }
    }
  // Associativity over sampled triples.
  ThetaObj a = theta_parse("[2;[1],[0]]");
  ThetaObj b = theta_parse("[1;[1]]");
  ThetaObj c = theta_parse("[2;[0],[1]]");
  for (const auto& f : theta_hom(a, b))
    for (const auto& g : theta_hom(b, c))
      for (const auto& h : theta_hom(c, b))
        CHECK(theta_compose(h, theta_compose(g, f)) ==
              theta_compose(theta_compose(h, g), f));
}

TEST_CASE("hom enumeration matches the simplex oracle at level 1") {
  // Hom([m],[m']) is the set of monotone maps; count = C(m+m'+1, m+1).
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int m = 0; m <= 3; ++m)
    for (int mp = 0; mp <= 3; ++mp) {
      auto hom = theta_hom(ThetaObj{1, m, {}}, ThetaObj{1, mp, {}});
      CHECK(static_cast<long>(hom.size()) == binom(m + mp + 1, m + 1));
      std::set<std::vector<int>> phis;
      for (const auto& f : hom) {
        CHECK(std::is_sorted(f.phi.begin(), f.phi.end()));
        phis.insert(f.phi);
      }
      CHECK(phis.size() == hom.size());
    }
}

TEST_CASE("realization of named shapes") {
  // Level-1 trees realize to simplexes, cell trees to cells, the wreath
  // suspension to the categorical suspension.
  for (int m = 0; m <= 3; ++m)
    CHECK(is_iso(realize(ThetaObj{1, m, {}}).cat, simplex(m)));
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(is_iso(realize(cell_tree(n, k)).cat, promote(cell(k), n)));
  CHECK(is_iso(realize(sigma_obj(theta_parse("[2]"))).cat,
               suspension(simplex(2))));
  // iota([m]) realizes to the promoted simplex.
  for (int m = 0; m <= 3; ++m)
    CHECK(is_iso(realize(iota_obj(2, m)).cat, promote(simplex(m), 2)));
}

TEST_CASE("the 2-cell-then-arrow shape has ten cells") {
  const RealizedTheta& r = realize(theta_parse("[2;[1],[0]]"));
  CHECK(r.cat.size() == 10);
  CHECK(is_gaunt(r.cat).gaunt);
  CHECK(fun_enum(promote(cell(0), 2), r.cat).size() == 3);
  CHECK(fun_enum(promote(cell(1), 2), r.cat).size() == 8);
  CHECK(fun_enum(cell(2), r.cat).size() == 10);
  CHECK(r.vertices.size() == 3);
  CHECK(r.segs.size() == 2);
}

TEST_CASE("realization is fully faithful on a window") {
  // Oracle: realize_mor is a bijection Hom(a,b) -> Fun(|a|,|b|).
  auto objs = theta_enumerate_objects(2, 4);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto hom = theta_hom(a, b);
      auto funs = fun_enum(realize(a).cat, realize(b).cat);
      CHECK(hom.size() == funs.size());
      std::set<std::vector<int>> images;
      for (const auto& f : hom) images.insert(realize_mor(f).assignment);
      CHECK(images.size() == hom.size());
      std::set<std::vector<int>> all;
      for (const auto& g : funs) all.insert(g.assignment);
      CHECK(images == all);
    }
}

TEST_CASE("realization is functorial") {
  ThetaObj a = theta_parse("[1;[1]]");
  ThetaObj b = theta_parse("[2;[1],[0]]");
  ThetaObj c = theta_parse("[1;[2]]");
  for (const auto& f : theta_hom(a, b))
    for (const auto& g : theta_hom(b, c)) {
      FunctorMap lhs = realize_mor(theta_compose(g, f));
      FunctorMap rhs = compose(realize_mor(g), realize_mor(f));
      CHECK(lhs.assignment == rhs.assignment);
    }
  CHECK(realize_mor(theta_identity(b)).assignment ==
        identity_functor(realize(b).cat).assignment);
}

TEST_CASE("delta embeds multi-simplexes functorially") {
  // delta_2 of [1] x [2] is the 2 x 1 grid.
  CHECK(delta_obj({1, 2}) == theta_parse("[2;[1],[1]]"));
  ThetaMor d1 = delta_mor({1, 2}, {2, 1}, {{0, 2}, {0, 1, 1}});
  CHECK(theta_valid_mor(d1));
  ThetaMor d2 = delta_mor({2, 1}, {1, 1}, {{0, 1, 1}, {0, 1}});
  CHECK(theta_valid_mor(d2));
  // Coordinatewise composition agrees with Theta composition.
  ThetaMor composite = delta_mor({1, 2}, {1, 1}, {{0, 1}, {0, 1, 1}});
  CHECK(theta_compose(d2, d1) == composite);
  // Identity coordinates give the identity morphism.
  CHECK(delta_mor({1, 2}, {1, 2}, {{0, 1}, {0, 1, 2}}) ==
        theta_identity(delta_obj({1, 2})));
}

TEST_CASE("grid retract presentation") {
  ThetaObj o = theta_parse("[2;[1],[0]]");
  GridRetract g = grid_retract(o);
  CHECK(g.grid == std::vector<int>{1, 2});
  CHECK(theta_valid_mor(g.section));
  CHECK(theta_valid_mor(g.retraction));
  CHECK(g.section.dom == o);
  CHECK(g.section.cod == delta_obj(g.grid));
  CHECK(theta_compose(g.retraction, g.section) == theta_identity(o));
  // Every window object splits off its grid.
  for (int level = 1; level <= 3; ++level)
    for (const auto& t : theta_enumerate_objects(level, 4)) {
      GridRetract gr = grid_retract(t);
      CHECK(static_cast<int>(gr.grid.size()) == level);
      CHECK(gr.section.cod == delta_obj(gr.grid));
      CHECK(theta_compose(gr.retraction, gr.section) == theta_identity(t));
    }
}

TEST_CASE("realization respects the grid retraction") {
  ThetaObj o = theta_parse("[2;[1],[0]]");
  GridRetract g = grid_retract(o);
  FunctorMap s = realize_mor(g.section);
  FunctorMap r = realize_mor(g.retraction);
  CHECK(compose(r, s).assignment == identity_functor(realize(o).cat).assignment);
}

TEST_CASE("realized morphisms are deterministic") {
  ThetaObj a = theta_parse("[2;[1],[0]]");
  ThetaObj b = theta_parse("[2;[1],[1]]");
  auto hom = theta_hom(a, b);
  REQUIRE(!hom.empty());
  for (const auto& f : hom)
    CHECK(realize_mor(f).assignment == realize_mor(f).assignment);
  CHECK(theta_hom(a, b) == hom);
}
