#pragma once

#include <string>
#include <vector>

#include "nct/ncat.hpp"

namespace nct {

// The globular window: the full subcategory on the cells C_0..C_n (promoted
// to a common ambient dimension) with every hom-set enumerated.
struct GlobularWindow {
  int n = 0;
  std::vector<FiniteStrictNCat> objects;  // objects[k] = C_k promoted to n
  // hom[i][j] = all functors C_i -> C_j, in fun_enum order.
  std::vector<std::vector<std::vector<FunctorMap>>> hom;
};

GlobularWindow globular_window(int n, const Budget& budget = Budget::from_env());

// An auto-equivalence of the window: object assignment plus its action on
// every hom-set (as index maps into fun_enum order), matched to the unique
// direction-reversal r_I that restricts to it.
struct AutoEquivalence {
  std::vector<int> obj;  // k -> image object index
  // hom_action[i][j][t] = index of the image of hom[i][j][t] in
  // hom[obj[i]][obj[j]].
  std::vector<std::vector<std::vector<int>>> hom_action;
  std::vector<bool> flips;  // the matched I in (Z/2)^n
};

// Exhaustive search for endofunctors of the window that are invertible on it
// (bijective on objects and every hom-set).  Deterministic order; exactly
// 2^n results, one per r_I.
std::vector<AutoEquivalence> autos_of_globular(
    int n, const Budget& budget = Budget::from_env());

struct RIGroupReport {
  bool group_law_ok = false;      // r_I . r_J = r_{I xor J} on the corpus
  bool gaunt_preserved = false;   // r_I keeps gaunt objects gaunt
  bool distinct_witnessed = false;  // n >= 2: r_{(1,0,..)} != r_{(0,1,..)}
  std::string witness;
};

// Checks the (Z/2)^n group action of the direction reversals on a corpus of
// valid objects; the distinctness witness compares comp_1 tables on the
// realized tree ([2];[1],[0]) when n >= 2.
RIGroupReport verify_rI_group(int n,
                              const std::vector<FiniteStrictNCat>& corpus);

struct RetractCertificate {
  FiniteStrictNCat ambient;
  FunctorMap idempotent;        // ambient -> ambient, e . e = e
  FiniteStrictNCat splitting;   // induced structure on the fixed cells
  FunctorMap section;           // splitting -> ambient
  FunctorMap retraction;        // ambient -> splitting
};

// All retracts of X: idempotents in fun_enum(X, X) split through their fixed
// cells; one certificate per is_iso class of splittings, in fun_enum order.
std::vector<RetractCertificate> retracts_of(
    const FiniteStrictNCat& x, const Budget& budget = Budget::from_env());

// Bounded window of the retract-and-fiber-product closure of the cells:
// alternately adjoin fiber products over cells and retract splittings,
// discarding objects larger than size_bound; deduplicated by is_iso.
std::vector<FiniteStrictNCat> upsilon_window(
    int n, int size_bound, int rounds = -1,  // -1: default n + 1
    const Budget& budget = Budget::from_env());

// A functor between corpus members, by index.
struct CorpusFunctor {
  int from = 0, to = 0;
  FunctorMap map;
};

// Every functor between every ordered pair of corpus members.
std::vector<CorpusFunctor> full_functor_family(
    const std::vector<FiniteStrictNCat>& corpus,
    const Budget& budget = Budget::from_env());

// Families {eta_X in Fun(X, X)} natural against every functor of the family:
// f . eta_from = eta_to . f.  Returns one vector of per-object endofunctors
// per surviving family, in deterministic order.
std::vector<std::vector<FunctorMap>> natural_endo_probe(
    const std::vector<FiniteStrictNCat>& corpus,
    const std::vector<CorpusFunctor>& family,
    const Budget& budget = Budget::from_env());

}  // namespace nct
