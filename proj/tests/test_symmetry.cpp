#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nct/enumerate.hpp"
#include "nct/ncat.hpp"
#include "nct/standard.hpp"
#include "nct/symmetry.hpp"
#include "nct/theta.hpp"

using namespace nct;

TEST_CASE("the globular window is closed and has the expected hom sizes") {
  GlobularWindow w = globular_window(2);
  REQUIRE(w.objects.size() == 3);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      // A functor C_i -> C_j is determined by the image of the top cell: any
      // cell of dimension <= i, i.e. 2i+2 of them when i < j, else 2j+1.
      int expect = i < j ? 2 * i + 2 : 2 * j + 1;
      CHECK(static_cast<int>(w.hom[i][j].size()) == expect);
      for (const auto& f : w.hom[i][j])
        CHECK(is_functor(f.source, f.target, f.assignment));
    }
}

TEST_CASE("the window has exactly 2^n invertible endofunctors") {
  for (int n = 1; n <= 3; ++n) {
    auto autos = autos_of_globular(n);
    CHECK(static_cast<int>(autos.size()) == (1 << n));
    std::set<std::vector<bool>> flips;
    for (const auto& a : autos) {
      flips.insert(a.flips);
      // Every automorphism fixes each cell object.
      for (int k = 0; k <= n; ++k) CHECK(a.obj[k] == k);
    }
    CHECK(static_cast<int>(flips.size()) == (1 << n));  // one per r_I
  }
}

TEST_CASE("automorphism actions compose like (Z/2)^n") {
  auto autos = autos_of_globular(2);
  auto find = [&](const std::vector<bool>& f) -> const AutoEquivalence& {
    for (const auto& a : autos)
      if (a.flips == f) return a;
    throw std::runtime_error("missing flip");
  };
  GlobularWindow w = globular_window(2);
  for (const auto& a : autos)
    for (const auto& b : autos) {
      std::vector<bool> x(2);
      for (int l = 0; l < 2; ++l) x[l] = a.flips[l] != b.flips[l];
      const AutoEquivalence& c = find(x);
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
          for (size_t t = 0; t < w.hom[i][j].size(); ++t)
            CHECK(a.hom_action[i][j][b.hom_action[i][j][t]] ==
                  c.hom_action[i][j][t]);
    }
}

TEST_CASE("direction reversals form a group action and preserve gauntness") {
  std::vector<FiniteStrictNCat> corpus = {
      point(2),         cell(2),
      boundary(2),      promote(simplex(2), 2),
      promote(walking_iso(), 2),  // non-gaunt: skipped by the gaunt check
      realize(theta_parse("[2;[1],[0]]")).cat};
  RIGroupReport rep = verify_rI_group(2, corpus);
  INFO(rep.witness);
  CHECK(rep.group_law_ok);
  CHECK(rep.gaunt_preserved);
  CHECK(rep.distinct_witnessed);
  // r_I . r_I = id is the J = I instance of the group law; spot-check.
  FiniteStrictNCat x = realize(theta_parse("[2;[1],[0]]")).cat;
  FiniteStrictNCat y = opposite_r(opposite_r(x, {true, false}), {true, false});
  CHECK(y.structures[0].comp == x.structures[0].comp);
  CHECK(y.structures[1].comp == x.structures[1].comp);
}

TEST_CASE("retract certificates recompose") {
  for (const auto& x : {cell(1), promote(simplex(2), 1),
                        product(cell(1), cell(1))}) {
    auto rs = retracts_of(x);
    CHECK(!rs.empty());
    for (const auto& cert : rs) {
      // retraction . section = identity on the splitting
      FunctorMap rs_id = compose(cert.retraction, cert.section);
      CHECK(rs_id.assignment ==
            identity_functor(cert.splitting).assignment);
      // section . retraction = the idempotent
      FunctorMap sr = compose(cert.section, cert.retraction);
      CHECK(sr.assignment == cert.idempotent.assignment);
      CHECK(is_functor(cert.splitting, x, cert.section.assignment));
      if (is_gaunt(x).gaunt) CHECK(is_gaunt(cert.splitting).gaunt);
    }
  }
}

TEST_CASE("retract inventories match the oracles") {
  CHECK(retracts_of(point(0)).size() == 1);
  for (int k = 1; k <= 2; ++k) {
    bool has_lower = false;
    for (const auto& cert : retracts_of(cell(k)))
      if (is_iso(cert.splitting, promote(cell(k - 1), k))) has_lower = true;
    CHECK(has_lower);
  }
  bool has_simplex = false;
  for (const auto& cert : retracts_of(product(cell(1), cell(1))))
    if (is_iso(cert.splitting, simplex(2))) has_simplex = true;
  CHECK(has_simplex);
}

TEST_CASE("the level-1 closure window contains the simplex chain") {
  auto pool = upsilon_window(1, 15, 3);
  for (int m = 0; m <= 4; ++m) {
    bool found = false;
    for (const auto& x : pool)
      if (is_iso(x, simplex(m))) found = true;
    INFO("missing simplex ", m);
    CHECK(found);
  }
  for (const auto& x : pool) {
    CHECK(x.size() <= 15);
    CHECK(is_gaunt(x).gaunt);
  }
}

TEST_CASE("the closure window reaches a fixed point") {
  auto p2 = upsilon_window(1, 3, 2);
  auto p3 = upsilon_window(1, 3, 3);
  CHECK(p2.size() == p3.size());
  // Seeds are always present.
  for (int k = 0; k <= 1; ++k) {
    bool found = false;
    for (const auto& x : p2)
      if (is_iso(x, cell(k))) found = true;
    CHECK(found);
  }
}

TEST_CASE("natural endo-transformation probe") {
  // Full family over the cells: only the identity family is natural.
  std::vector<FiniteStrictNCat> cells2 = {point(2), promote(cell(1), 2),
                                          cell(2)};
  auto fams = natural_endo_probe(cells2, full_functor_family(cells2));
  REQUIRE(fams.size() == 1);
  for (size_t a = 0; a < cells2.size(); ++a)
    CHECK(fams[0][a].assignment == identity_functor(cells2[a]).assignment);

  std::vector<FiniteStrictNCat> just_point = {point(0)};
  CHECK(natural_endo_probe(just_point, full_functor_family(just_point)).size() ==
        1);

  // With only the identity functor, naturality is vacuous: |Fun(X,X)| = 4
  // for the two-point discrete object.
  std::vector<FiniteStrictNCat> two = {coproduct(point(0), point(0))};
  std::vector<CorpusFunctor> id_only = {{0, 0, identity_functor(two[0])}};
  CHECK(natural_endo_probe(two, id_only).size() == 4);
}
