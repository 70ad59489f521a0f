#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nct/config.hpp"

namespace nct {

// One category structure (*, s, t) on a fixed cell set.  src/tgt are total
// endo-maps on cell indices; comp is partial, keyed by (x, y) with
// src(x) == tgt(y), meaning "x after y".
struct CatStructure {
  std::vector<int> src;
  std::vector<int> tgt;
  std::map<std::pair<int, int>, int> comp;
};

// Single-sorted finite strict n-category: one cell set carrying n
// interacting category structures (structure 1 is the object-level one).
// Immutable after construction by convention; all operations are pure.
struct FiniteStrictNCat {
  int n = 0;
  std::vector<std::string> cells;
  std::vector<CatStructure> structures;  // length n, index i-1 <-> structure i

  int size() const { return static_cast<int>(cells.size()); }
  int index_of(const std::string& name) const;  // -1 if absent

  // i in 1..n
  int src(int i, int c) const { return structures[i - 1].src[c]; }
  int tgt(int i, int c) const { return structures[i - 1].tgt[c]; }
  std::optional<int> comp(int i, int x, int y) const;
  bool composable(int i, int x, int y) const { return src(i, x) == tgt(i, y); }

  // c is an identity for structure i  <=>  src_i(c) == c.
  bool is_identity_at(int i, int c) const { return src(i, c) == c; }

  // Least k such that c is a structure-i identity for all i > k.
  int dim(int c) const;

  std::vector<int> cells_of_dim_le(int k) const;
};

// A cell map certified (or to be certified) to respect all n structures.
struct FunctorMap {
  FiniteStrictNCat source;
  FiniteStrictNCat target;
  std::vector<int> assignment;  // source cell index -> target cell index

  int operator()(int c) const { return assignment[c]; }
};

FunctorMap identity_functor(const FiniteStrictNCat& x);
FunctorMap compose(const FunctorMap& g, const FunctorMap& f);  // g after f

// Structural check that `assignment` commutes with every src/tgt and
// preserves every comp (including composability of image pairs).
bool is_functor(const FiniteStrictNCat& a, const FiniteStrictNCat& x,
                const std::vector<int>& assignment);

struct AxiomViolation {
  std::string axiom;              // idempotency | domain | boundary | unit |
                                  // associativity | functoriality | interchange |
                                  // globularity
  std::vector<std::string> witness;  // offending cells, in order
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<AxiomViolation> violations;
  std::vector<std::string> input_errors;  // malformed input, not axiom failures

  bool valid() const { return ok; }
};

// Checks every axiom of the single-sorted model and reports all violations
// with concrete witnesses.  Malformed input (out-of-range indices, wrong
// structure count) is reported separately from axiom violations.
ValidationReport validate(const FiniteStrictNCat& x);

// Throws InternalError if x does not validate; used on constructor outputs.
void require_valid(const FiniteStrictNCat& x, const std::string& who);

// JSON round-trip, canonical key ordering; see the file-format contract in
// the README.
std::string to_json(const FiniteStrictNCat& x);
FiniteStrictNCat ncat_from_json(const std::string& text);

}  // namespace nct
