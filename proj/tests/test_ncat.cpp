#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nct/enumerate.hpp"
#include "nct/ncat.hpp"
#include "nct/standard.hpp"

using namespace nct;

namespace {

// Independent oracle: all |X|^|A| raw assignments filtered by the full
// functor predicate.  Only usable at tiny sizes.
long brute_force_functor_count(const FiniteStrictNCat& a,
                               const FiniteStrictNCat& x) {
  std::vector<int> h(a.size(), 0);
  long count = 0;
  while (true) {
    if (is_functor(a, x, h)) ++count;
    int p = 0;
    while (p < a.size() && ++h[p] == x.size()) h[p++] = 0;
    if (p == a.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("constructors validate") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(validate(cell(k)).ok);
    CHECK(validate(boundary(k)).ok);
    CHECK(cell(k).size() == 2 * k + 1);
    CHECK(boundary(k).size() == 2 * k);
  }
  CHECK(validate(walking_iso()).ok);
  CHECK(walking_iso().size() == 4);
  for (int m = 0; m <= 4; ++m) {
    CHECK(validate(simplex(m)).ok);
    CHECK(simplex(m).size() == (m + 1) * (m + 2) / 2);
  }
  CHECK(validate(empty_ncat(2)).ok);
  CHECK(validate(promote(walking_iso(), 3)).ok);
  CHECK(validate(product(cell(1), cell(1))).ok);
  CHECK(product(cell(1), cell(1)).size() == 9);
  CHECK(validate(suspension(walking_iso())).ok);
  CHECK(suspension(walking_iso()).size() == 6);
}

TEST_CASE("validate flags an injected unit fault") {
  FiniteStrictNCat c1 = cell(1);
  // Redirect comp_1(pt, T1) (= pt composed with an identity) to T1.
  int pt = c1.index_of("pt"), t1 = c1.index_of("T1");
  c1.structures[0].comp[{pt, t1}] = t1;
  ValidationReport r = validate(c1);
  CHECK(!r.ok);
  bool unit_seen = false;
  for (const auto& v : r.violations)
    if (v.axiom == "unit" || v.axiom == "boundary") unit_seen = true;
  CHECK(unit_seen);
}

TEST_CASE("validate separates malformed input from axiom failure") {
  FiniteStrictNCat x = cell(1);
  x.structures[0].comp[{0, 7}] = 0;  // unknown cell index
  ValidationReport r = validate(x);
  CHECK(!r.ok);
  CHECK(!r.input_errors.empty());
  CHECK(r.violations.empty());
}

TEST_CASE("validate flags broken interchange") {
  // Take C_1 x C_1 promoted to n=2 and damage nothing: valid.
  FiniteStrictNCat p = promote(product(cell(1), cell(1)), 2);
  CHECK(validate(p).ok);
  // Swap src_1/tgt_1 only (not comp order): breaks unit/boundary laws.
  FiniteStrictNCat bad = p;
  std::swap(bad.structures[0].src, bad.structures[0].tgt);
  CHECK(!validate(bad).ok);
}

TEST_CASE("dimension from identity membership") {
  FiniteStrictNCat c2 = cell(2);
  CHECK(c2.dim(c2.index_of("pt")) == 2);
  CHECK(c2.dim(c2.index_of("T1")) == 1);
  CHECK(c2.dim(c2.index_of("B1")) == 1);
  CHECK(c2.dim(c2.index_of("T2")) == 0);
  CHECK(c2.dim(c2.index_of("B2")) == 0);
  CHECK(c2.cells_of_dim_le(0).size() == 2);
  CHECK(c2.cells_of_dim_le(1).size() == 4);
}

TEST_CASE("json round-trip") {
  for (const FiniteStrictNCat& x :
       {cell(2), walking_iso(), simplex(2), boundary(2)}) {
    std::string j = to_json(x);
    FiniteStrictNCat y = ncat_from_json(j);
    CHECK(validate(y).ok);
    CHECK(to_json(y) == j);
  }
  CHECK_THROWS_AS(ncat_from_json("{"), InputError);
  CHECK_THROWS_AS(ncat_from_json("{\"n\":1,\"cells\":[\"a\"],\"structures\":[]}"),
                  InputError);
}

TEST_CASE("fun_enum against brute force oracle") {
  struct Case {
    FiniteStrictNCat a, x;
  };
  std::vector<Case> cases = {
      {cell(0), cell(1)}, {cell(1), cell(1)},      {walking_iso(), walking_iso()},
      {cell(1), cell(2)}, {boundary(1), cell(1)},  {simplex(2), cell(1)},
      {cell(2), cell(2)}, {cell(1), walking_iso()},
  };
  for (auto& c : cases) {
    long expect = brute_force_functor_count(promote(c.a, std::max(c.a.n, c.x.n)),
                                            promote(c.x, std::max(c.a.n, c.x.n)));
    auto fs = fun_enum(c.a, c.x);
    CHECK(static_cast<long>(fs.size()) == expect);
    std::set<std::vector<int>> distinct;
    for (auto& f : fs) {
      CHECK(is_functor(f.source, f.target, f.assignment));
      distinct.insert(f.assignment);
    }
    CHECK(distinct.size() == fs.size());
  }
  CHECK(fun_enum(cell(0), cell(1)).size() == 2);
  CHECK(fun_enum(cell(1), cell(1)).size() == 3);
  CHECK(fun_enum(walking_iso(), walking_iso()).size() == 4);
}

TEST_CASE("fun_enum objects bijection") {
  for (const FiniteStrictNCat& x :
       {cell(2), walking_iso(), simplex(3), promote(boundary(2), 2)}) {
    auto fs = fun_enum(cell(0), x);
    CHECK(static_cast<int>(fs.size()) ==
          static_cast<int>(x.cells_of_dim_le(0).size()));
  }
}

TEST_CASE("fun_enum respects the node budget") {
  Budget tiny;
  tiny.max_search_nodes = 3;
  CHECK_THROWS_AS(fun_enum(simplex(3), simplex(3), tiny), ResourceError);
}

TEST_CASE("is_iso basics") {
  CHECK(is_iso(cell(2), suspension(suspension(cell(0)))));
  CHECK(!is_iso(cell(1), boundary(2)));
  CHECK(is_iso(suspension(empty_ncat(0)), coproduct(cell(0), cell(0))));
  CHECK(is_iso(boundary(1), coproduct(cell(0), cell(0))));
  // Same sizes, different shapes.
  CHECK(!is_iso(coproduct(cell(1), promote(cell(0), 1)), walking_iso()));
  FunctorMap w;
  CHECK(is_iso(simplex(2), simplex(2), &w));
  CHECK(is_functor(w.source, w.target, w.assignment));
}

TEST_CASE("gauntness: direct scan and locality criterion agree") {
  std::vector<FiniteStrictNCat> corpus = {
      cell(0),          cell(1),           cell(2),
      boundary(2),      simplex(3),        walking_iso(),
      suspension(walking_iso()),           product(cell(1), cell(1)),
      promote(coproduct(cell(0), cell(0)), 1)};
  for (const auto& x : corpus) {
    bool direct = is_gaunt(x).gaunt;
    bool local = is_gaunt_by_locality(x);
    CHECK(direct == local);
  }
  CHECK(is_gaunt(cell(3)).gaunt);
  CHECK(is_gaunt(simplex(3)).gaunt);
  CHECK(!is_gaunt(walking_iso()).gaunt);
  CHECK(!is_gaunt(suspension(walking_iso())).gaunt);
  GauntReport r = is_gaunt(walking_iso());
  CHECK(r.level == 1);
  CHECK((r.witness_cell == "f" || r.witness_cell == "g"));
}

TEST_CASE("max_sub_k") {
  CHECK(is_iso(max_sub_k(cell(2), 1), boundary(2)));
  CHECK(is_iso(max_sub_k(walking_iso(), 0), coproduct(cell(0), cell(0))));
  CHECK(is_iso(max_sub_k(cell(2), 2), cell(2)));
  // Factorization property: every functor C_i -> X with i <= k lands in
  // max_sub_k, and the counts agree.
  FiniteStrictNCat x = suspension(walking_iso());
  FiniteStrictNCat sub = max_sub_k(x, 1);
  for (int i = 0; i <= 1; ++i)
    CHECK(fun_enum(cell(i), x).size() == fun_enum(cell(i), sub).size());
}

TEST_CASE("opposite_r") {
  FiniteStrictNCat e = walking_iso();
  CHECK(validate(opposite_r(e, {true})).ok);
  CHECK(opposite_r(e, {false}).cells == e.cells);
  // Involution: flipping twice restores the structure maps.
  FiniteStrictNCat twice = opposite_r(opposite_r(e, {true}), {true});
  CHECK(twice.structures[0].src == e.structures[0].src);
  CHECK(twice.structures[0].comp == e.structures[0].comp);
  for (int k = 0; k <= 2; ++k) {
    std::vector<bool> flips(std::max(k, 1), false);
    if (k >= 1) flips[0] = true;
    CHECK(is_iso(opposite_r(promote(cell(k), std::max(k, 1)), flips),
                 promote(cell(k), std::max(k, 1))));
  }
}

TEST_CASE("fiber product and product") {
  // Fiber product over the point is the plain product.
  FunctorMap f = to_point(cell(1)), g = to_point(cell(1));
  FunctorMap pl, pr;
  FiniteStrictNCat fp = fiber_product(f, g, &pl, &pr);
  CHECK(validate(fp).ok);
  CHECK(is_iso(fp, product(cell(1), cell(1))));
  CHECK(is_functor(pl.source, pl.target, pl.assignment));
  CHECK(is_functor(pr.source, pr.target, pr.assignment));
  // [3] = [2] x_{[1]} [2] along the two "interval collapse" maps.
  FiniteStrictNCat s2 = simplex(2), s1 = simplex(1);
  auto idx = [&](const FiniteStrictNCat& s, const std::string& c) {
    return s.index_of(c);
  };
  // h: [2] -> [1], 0,1 -> 0, 2 -> 1 and k: [2] -> [1], 0 -> 0, 1,2 -> 1.
  std::vector<int> ha(s2.size()), ka(s2.size());
  auto mono = [&](std::vector<int>& out, std::vector<int> vertex_image) {
    for (int i = 0; i <= 2; ++i)
      for (int j = i; j <= 2; ++j) {
        std::string nm = i == j ? std::to_string(i)
                                : std::to_string(i) + "-" + std::to_string(j);
        int vi = vertex_image[i], vj = vertex_image[j];
        std::string tn = vi == vj ? std::to_string(vi)
                                  : std::to_string(vi) + "-" + std::to_string(vj);
        out[idx(s2, nm)] = idx(s1, tn);
      }
  };
  mono(ha, {0, 0, 1});
  mono(ka, {0, 1, 1});
  FunctorMap h{s2, s1, ha}, k{s2, s1, ka};
  REQUIRE(is_functor(s2, s1, ha));
  REQUIRE(is_functor(s2, s1, ka));
  CHECK(is_iso(fiber_product(h, k), simplex(3)));
}

TEST_CASE("suspension commutes with fiber products") {
  FunctorMap f = to_point(cell(1)), g = to_point(walking_iso());
  FiniteStrictNCat lhs = suspension(fiber_product(f, g));
  FiniteStrictNCat rhs = fiber_product(suspension(f), suspension(g));
  CHECK(is_iso(lhs, rhs));
}

TEST_CASE("cell map classification: factor through point or suspension") {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (const auto& f : fun_enum(cell(i), cell(j))) {
        bool constant = true;
        for (int v : f.assignment) constant = constant && v == f.assignment[0];
        bool susp = is_cell_suspension(f, i, j);
        CHECK((constant || susp));
      }
}

TEST_CASE("classify_map_to_cell") {
  // Among the 3 maps C_2 -> C_1 exactly one is nondegenerate.
  auto maps = fun_enum(cell(2), cell(1));
  REQUIRE(maps.size() == 3);
  int nondeg = 0;
  for (const auto& f : maps)
    if (!classify_map_to_cell(f, 1).degenerate) ++nondeg;
  CHECK(nondeg == 1);
  // Any map to C_0 is nondegenerate.
  for (const auto& f : fun_enum(walking_iso(), promote(cell(0), 1)))
    CHECK(!classify_map_to_cell(f, 0).degenerate);
  // The constant map C_1 -> C_1 is degenerate through C_0.
  FiniteStrictNCat c1 = cell(1);
  FunctorMap cst{c1, c1, {1, 1, 1}};
  auto cls = classify_map_to_cell(cst, 1);
  CHECK(cls.degenerate);
  CHECK(cls.through == 0);
  // Nondegenerate maps from suspended sources are suspensions.
  for (const auto& f : fun_enum(cell(2), cell(2)))
    if (!classify_map_to_cell(f, 2).degenerate)
      CHECK(is_cell_suspension(f, 2, 2));
}

TEST_CASE("decompose_cell_pullback cases") {
  // Two distinct object inclusions C_0 => C_1: disjoint, pullback empty.
  FiniteStrictNCat c1 = cell(1);
  FunctorMap top = from_point(c1, c1.index_of("T1"));
  FunctorMap bot = from_point(c1, c1.index_of("B1"));
  auto d = decompose_cell_pullback(top, 0, bot, 0, 1);
  CHECK(d.tag == PullbackCase::Disjoint);
  CHECK(d.m == 0);
  CHECK(is_iso(fiber_product(top, bot), boundary(0)));

  // Pullback along the identity: point fiber.
  FunctorMap id1 = identity_functor(c1);
  FunctorMap cst{c1, c1, {1, 1, 1}};  // constant at T1
  auto d2 = decompose_cell_pullback(cst, 1, id1, 1, 1);
  CHECK(d2.tag == PullbackCase::PointFiber);
  CHECK(is_iso(fiber_product(cst, id1), cell(1)));

  // i = 0 against a full collapse: degenerate factor, pullback = C_k.
  FunctorMap pt_in = from_point(promote(cell(0), 1), 0);  // C_0 -> C_0
  FunctorMap collapse = to_point(cell(1));                // C_1 -> C_0
  auto d3 = decompose_cell_pullback(promote(pt_in, 1), 0, collapse, 1, 0);
  CHECK(d3.tag == PullbackCase::DegenerateFactor);
  CHECK(d3.fiber_dim == 1);
  CHECK(is_iso(fiber_product(promote(pt_in, 1), collapse), cell(1)));

  // Genuine product: C_1 x_{C_0} C_1.
  auto d4 =
      decompose_cell_pullback(to_point(c1), 1, to_point(c1), 1, 0);
  CHECK(d4.tag == PullbackCase::GenuineProduct);
  CHECK(d4.p == 1);
  CHECK(d4.l == 1);

  // Suspended disjoint case: sigma of the first example is dC_1-fibered.
  auto d5 = decompose_cell_pullback(suspension(top), 1, suspension(bot), 1, 2);
  CHECK(d5.m == 1);
  CHECK(d5.tag == PullbackCase::Disjoint);
  CHECK(is_iso(fiber_product(suspension(top), suspension(bot)), boundary(1)));
}

TEST_CASE("initial and final objects") {
  CHECK(cell(1).cells[initial_object(cell(1))] == "T1");
  CHECK(cell(1).cells[final_object(cell(1))] == "B1");
  CHECK(simplex(2).cells[initial_object(simplex(2))] == "0");
  CHECK(simplex(2).cells[final_object(simplex(2))] == "2");
  CHECK(initial_object(cell(0)) == final_object(cell(0)));
  CHECK_THROWS_AS(final_object(promote(boundary(1), 1)), InputError);
}
