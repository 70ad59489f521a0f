#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nct/colimit.hpp"
#include "nct/ncat.hpp"

namespace nct {

// An object of Theta_n as a recursive wreath-product tree: level 1 is a
// simplex [m]; at level n > 1, ([m]; o_1,...,o_m) with level-(n-1) children.
struct ThetaObj {
  int level = 1;
  int m = 0;
  std::vector<ThetaObj> children;  // empty at level 1, else size m
};

// Defined out of line: a defaulted <=> cannot see through the recursive
// vector member.
bool operator==(const ThetaObj& a, const ThetaObj& b);
bool operator<(const ThetaObj& a, const ThetaObj& b);
inline bool operator!=(const ThetaObj& a, const ThetaObj& b) {
  return !(a == b);
}

// Canonical grammar: "[m]" at level 1; "[m; o_1,...,o_m]" above ("[0;]" when
// m = 0).  Whitespace-insensitive on input.
std::string theta_print(const ThetaObj& o);
ThetaObj theta_parse(const std::string& text);

// Total node count; realization cell count is linearly bounded by it.
int theta_size(const ThetaObj& o);

// A morphism (phi; phi_ij): phi monotone on {0..m}; the component block of
// source segment i lists phi_ij for j in (phi(i-1), phi(i)].
struct ThetaMor {
  ThetaObj dom, cod;
  std::vector<int> phi;                      // size dom.m + 1
  std::vector<std::vector<ThetaMor>> comps;  // size dom.m
};

bool operator==(const ThetaMor& a, const ThetaMor& b);
inline bool operator!=(const ThetaMor& a, const ThetaMor& b) {
  return !(a == b);
}

ThetaMor theta_identity(const ThetaObj& o);
ThetaMor theta_compose(const ThetaMor& g, const ThetaMor& f);
bool theta_valid_mor(const ThetaMor& f);  // well-typedness check

// Complete deterministic enumeration of Hom(a, b).
std::vector<ThetaMor> theta_hom(const ThetaObj& a, const ThetaObj& b);

// All objects of the given level with theta_size <= size_bound,
// duplicate-free, in deterministic order.
std::vector<ThetaObj> theta_enumerate_objects(int level, int size_bound);

// sigma(o) = ([1]; o); iota([m]) = ([m]; [0],...,[0]) at the given level.
ThetaObj sigma_obj(const ThetaObj& o);
ThetaMor sigma_mor(const ThetaMor& f);
ThetaObj iota_obj(int level, int m);
ThetaMor iota_mor(int level, const std::vector<int>& phi, int dom_m, int cod_m);

// The tree realizing the cell C_k inside Theta_level (k <= level).
ThetaObj cell_tree(int level, int k);

// delta_n sends [k_1] x ... x [k_n] to ([k_n]; g,...,g) with
// g = delta_{n-1}([k_1] x ... x [k_{n-1}]) repeated k_n times; on morphisms
// the outermost coordinate becomes phi and all components are delta of the
// rest.
ThetaObj delta_obj(const std::vector<int>& ks);
ThetaMor delta_mor(const std::vector<int>& dom_ks,
                   const std::vector<int>& cod_ks,
                   const std::vector<std::vector<int>>& coordinate_maps);

// Realization of a Theta-object as an iterated endpoint wedge of suspensions,
// with enough provenance to realize morphisms.
struct RealizedTheta {
  ThetaObj obj;
  FiniteStrictNCat cat;  // ambient dimension = obj.level
  std::vector<int> vertices;      // cell ids of v_0..v_m
  std::vector<FunctorMap> segs;   // sigma(realize(child_i)) -> cat, i = 1..m
  struct Def {
    enum class Kind { Vertex, Segment, Composite };
    Kind kind = Kind::Vertex;
    int vertex = -1;    // Vertex: which v_k
    int seg = 0;        // Segment: 1-based segment index
    int seg_cell = -1;  // Segment: cell index inside sigma(realize(child))
    int level = 0, x = -1, y = -1;  // Composite: comp_level(x, y) in cat
  };
  std::vector<Def> defs;  // one per cell of cat, topologically ordered
};

// Memoized; deterministic.  realize(o).cat is gaunt and valid.
const RealizedTheta& realize(const ThetaObj& o);

// The functor realize(f.dom).cat -> realize(f.cod).cat induced by f.
FunctorMap realize_mor(const ThetaMor& f);

// Retract presentation of o as a grid: the multi-index m with
// delta(m) the grid, plus section/retraction with r . s = id_o.
struct GridRetract {
  std::vector<int> grid;  // k_1..k_n
  ThetaMor section;       // o -> delta(grid)
  ThetaMor retraction;    // delta(grid) -> o
};

GridRetract grid_retract(const ThetaObj& o);

}  // namespace nct
