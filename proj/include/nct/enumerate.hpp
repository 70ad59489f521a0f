#pragma once

#include <optional>
#include <vector>

#include "nct/ncat.hpp"
#include "nct/standard.hpp"

namespace nct {

// Complete enumeration of functors A -> X by deterministic lexicographic
// backtracking with src/tgt/comp propagation.  The lower-dimensional input is
// promoted automatically.  Throws ResourceError past the node budget.
std::vector<FunctorMap> fun_enum(const FiniteStrictNCat& a,
                                 const FiniteStrictNCat& x,
                                 const Budget& budget = Budget::from_env());

// Decides existence of an invertible functor A -> B; search is pruned by
// per-dimension cell counts and dimension preservation.
bool is_iso(const FiniteStrictNCat& a, const FiniteStrictNCat& b,
            FunctorMap* witness = nullptr,
            const Budget& budget = Budget::from_env());

struct GauntReport {
  bool gaunt = false;
  // On failure: the level and a non-identity cell with a strict inverse.
  int level = 0;
  std::string witness_cell;
  std::string witness_inverse;
};

// Direct criterion: the only strictly invertible k-morphisms are identities.
// Cross-checked (in tests) against locality for sigma^{k-1}E -> C_{k-1}.
GauntReport is_gaunt(const FiniteStrictNCat& x,
                     const Budget& budget = Budget::from_env());

// The locality form of gauntness: restriction along the collapse
// sigma^{k-1}(E -> C_0) is a bijection Fun(C_{k-1}, X) -> Fun(sigma^{k-1}E, X)
// for every k = 1..n.
bool is_gaunt_by_locality(const FiniteStrictNCat& x,
                          const Budget& budget = Budget::from_env());

// Given f: A -> X and an injective m: B -> X whose image contains image(f),
// the unique g: A -> B with m.g = f.
FunctorMap factor_through(const FunctorMap& f, const FunctorMap& m);

// All injective functors C_j -> C_k built from iterated top/bottom object
// inclusions (2^(k-j) of them); source at ambient dimension j, target at k.
std::vector<FunctorMap> sub_cell_inclusions(int j, int k);

struct CellMapClass {
  bool degenerate = false;
  int through = -1;  // least j with a factorization through C_j -> C_k
};

// Classifies a map into the cell C_k: degenerate iff it factors through a
// proper sub-cell inclusion.
CellMapClass classify_map_to_cell(const FunctorMap& f, int k);

// --- maps between cells -----------------------------------------------------
// These helpers assume the standard cells produced by cell(k) (possibly
// promoted), whose last two cells are the top/bottom objects.

// f: C_i -> C_j is a suspension iff it fixes top and bottom.
bool is_cell_suspension(const FunctorMap& f, int i, int j);

// The unique g: C_{i-1} -> C_{j-1} with sigma(g) = f.
FunctorMap desuspend_cell_map(const FunctorMap& f, int i, int j);

enum class PullbackCase { Disjoint, PointFiber, DegenerateFactor, GenuineProduct };

// Decomposition recipe for the pullback of phi: C_i -> C_j, psi: C_k -> C_j.
struct CellPullbackDecomposition {
  PullbackCase tag;
  int m = 0;          // maximal common desuspension depth
  int fiber_dim = -1; // -1: empty fiber; else F = C_fiber_dim
  bool swapped = false;  // true when psi played the suspension role
  // GenuineProduct: pullback = sigma^m(C_p x C_l) with p, l >= 1.
  int p = 0;
  int l = 0;
  // The pullback is isomorphic to: Disjoint -> dC_m; PointFiber -> C_i (or
  // C_k when swapped); DegenerateFactor -> C_{m + fiber_dim}; GenuineProduct
  // -> the wedge/pushout decomposition of sigma^m(C_p x C_l).
};

CellPullbackDecomposition decompose_cell_pullback(const FunctorMap& phi, int i,
                                                  const FunctorMap& psi, int k,
                                                  int j);

}  // namespace nct
