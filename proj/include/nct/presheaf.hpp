#pragma once

#include <map>
#include <string>
#include <vector>

#include "nct/ncat.hpp"
#include "nct/theta.hpp"

namespace nct {

// Set-valued presheaves on the two index categories: Theta_n (wreath trees)
// and the n-fold simplex product Delta^xn (multi-indexes).  Our multi-index
// coordinate convention matches delta_obj: coordinate n is the outermost
// (1-cell) direction, coordinate 1 the innermost.

enum class Indexing { Theta, Delta };

struct TestObject {
  Indexing indexing = Indexing::Theta;
  ThetaObj theta;          // Theta indexing
  std::vector<int> multi;  // Delta indexing, size n
};

TestObject theta_test(const ThetaObj& o);
TestObject delta_test(const std::vector<int>& multi);
std::string test_print(const TestObject& t);
bool operator==(const TestObject& a, const TestObject& b);

// The gaunt category underlying a test object: realize(o) for Theta,
// realize(delta_obj(m)) for Delta.  Memoized via realize.
const FiniteStrictNCat& realize_test(const TestObject& t);

// A morphism between test objects of the same indexing.
struct IndexMor {
  ThetaMor theta;                        // Theta indexing
  std::vector<std::vector<int>> coords;  // Delta: per-coordinate monotone maps
};

IndexMor theta_index_mor(const ThetaMor& f);
IndexMor delta_index_mor(const std::vector<std::vector<int>>& coords);
IndexMor compose_index(const TestObject& a, const TestObject& b,
                       const TestObject& c, const IndexMor& g,
                       const IndexMor& f);  // g . f for f: a->b, g: b->c

// The induced functor realize_test(dom) -> realize_test(cod).  Memoized.
const FunctorMap& realize_index_mor(const TestObject& dom,
                                    const TestObject& cod, const IndexMor& g);

// All index morphisms dom -> cod (theta_hom or coordinatewise monotone maps).
std::vector<IndexMor> index_hom(const TestObject& dom, const TestObject& cod);

// A presheaf given as a finite colimit of nerves of gaunt categories:
// evaluation at a test object o is the colimit of the sets
// Fun(realize_test(o), atom) under postcomposition with the edges.
struct CellularPresheaf {
  Indexing indexing = Indexing::Theta;
  int n = 1;
  std::vector<FiniteStrictNCat> atoms;  // all gaunt, ambient dimension n
  struct Edge {
    int from = 0, to = 0;
    FunctorMap map;  // atoms[from] -> atoms[to]
  };
  std::vector<Edge> edges;
};

CellularPresheaf nerve(const FiniteStrictNCat& x, Indexing indexing);
std::string to_json(const CellularPresheaf& p);

// One evaluation: canonical class representatives plus a lookup from every
// raw element (atom index, functor assignment) to its class.
struct EvalSet {
  std::vector<std::pair<int, std::vector<int>>> reps;
  std::map<std::pair<int, std::vector<int>>, int> cls;
  int size() const { return static_cast<int>(reps.size()); }
};

const EvalSet& evaluate(const CellularPresheaf& p, const TestObject& o,
                        const Budget& budget = Budget::from_env());

// The restriction P(cod) -> P(dom) along g: dom -> cod, as a map of class
// indices (precomposition with realize_index_mor(g)).
std::vector<int> restriction(const CellularPresheaf& p, const TestObject& dom,
                             const TestObject& cod, const IndexMor& g,
                             const Budget& budget = Budget::from_env());

// A presheaf given as a finite colimit of representables y(vert); used for
// the Segal / Glob / Comp generator families where the domain objects are
// not nerves.  Hom(colim y(v), P) is the finite limit of evaluations.
struct FormalDiagram {
  Indexing indexing = Indexing::Theta;
  int n = 1;
  std::vector<TestObject> verts;
  struct Edge {
    int from = 0, to = 0;
    IndexMor mor;  // verts[from] -> verts[to]
  };
  std::vector<Edge> edges;
};

// Elements of Hom(D, P): one evaluation class per vertex, compatible along
// the edges.  Deterministic order.
std::vector<std::vector<int>> hom_formal(const FormalDiagram& d,
                                         const CellularPresheaf& p,
                                         const Budget& budget = Budget::from_env());

// Evaluation of the formal colimit itself at a test object: classes of
// (vertex, index morphism o -> vert) under the edge zig-zag.
EvalSet evaluate_formal(const FormalDiagram& d, const TestObject& o);

// Map of nerve-colimit presheaves: per source atom a target atom and a
// functor, commuting with the edges.
struct PresheafMap {
  CellularPresheaf source, target;
  std::vector<int> atom_target;
  std::vector<FunctorMap> atom_map;
};

// Elements of Hom(U, X) for X a single-atom nerve: per-U-atom assignments
// into X.atoms[0], compatible with the edges of U.  Uses nerve full
// faithfulness; throws InputError when X has more than one atom.
std::vector<std::vector<std::vector<int>>> hom_nerve(
    const CellularPresheaf& u, const CellularPresheaf& x,
    const Budget& budget = Budget::from_env());

// Map of formal colimits: per source vertex a target vertex plus an index
// morphism into it.
struct FormalMap {
  FormalDiagram source, target;
  std::vector<int> vert_target;
  std::vector<IndexMor> vert_mor;
};

struct Generator {
  std::string family;  // Segal_Delta | Glob_Delta | Comp_Delta |
                       // Segal_Theta | Comp_Theta | S00 | S0_window
  std::string clause;  // instance description, e.g. "(c) i=0 j=1 k=1"
  bool formal = true;
  FormalMap fmap;    // when formal
  PresheafMap nmap;  // when !formal (fundamental-pushout families)
};

struct GeneratorSet {
  std::string label;
  std::vector<Generator> gens;
};

// Explicit finite generator lists.  `bound` caps the infinite families:
// coordinate entries for the Delta families, tree size for the Theta
// families; it is ignored for S00.  S0_window is S00 plus a fixed finite
// family of fiber-product transports.
GeneratorSet build_generators(const std::string& label, int n, int bound);

struct LocalityResult {
  bool local = false;
  int dom_count = 0, cod_count = 0;
  std::string witness;
};

// Locality of X with respect to g: precomposition Hom(cod, X) -> Hom(dom, X)
// is a bijection.  Exact (not window-relative).
LocalityResult is_local(const CellularPresheaf& x, const Generator& g,
                        const Budget& budget = Budget::from_env());

struct EvalBijection {
  bool bijective = false;
  std::string witness;  // first failing test object with counts
};

// Whether the generator induces a bijection on evaluations at every window
// object (i.e. is an isomorphism of presheaves as far as the window sees).
EvalBijection evaluation_bijective(const Generator& g,
                                   const std::vector<TestObject>& window,
                                   const Budget& budget = Budget::from_env());

// The fiber-product transport H x_{C_i} (-) of a nerve-kind generator g:
// rho gives per-target-atom maps to the promoted cell C_i commuting with the
// edges of the target; h: H -> C_i.  Atoms become cellwise fiber products.
Generator transport_fiber_product(const Generator& g,
                                  const std::vector<FunctorMap>& rho,
                                  const FunctorMap& h);

// The standard windows: all Theta_n trees with theta_size <= size_bound, or
// all multi-indexes whose delta image has theta_size <= size_bound.
std::vector<TestObject> default_window(Indexing indexing, int n,
                                       int size_bound);

struct RecognitionResult {
  bool accepted = false;
  FiniteStrictNCat reconstruction;
  std::string witness;  // failing generator or indeterminacy description
};

// Decides whether X is the nerve of a gaunt n-category: locality against the
// generator families for its indexing (bounded by gen_bound), then
// reconstruction from the cell and gluing evaluations, validation, and a
// window comparison of evaluation counts.
RecognitionResult recognize_gaunt_nerve(const CellularPresheaf& x,
                                        const std::vector<TestObject>& window,
                                        int gen_bound,
                                        const Budget& budget = Budget::from_env());

}  // namespace nct
