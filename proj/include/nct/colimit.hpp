#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nct/ncat.hpp"

namespace nct {

// A span X <- A -> Y to be pushed out.
struct SpanDiagram {
  FiniteStrictNCat apex;
  FunctorMap left;   // apex -> X
  FunctorMap right;  // apex -> Y
};

// Provenance of each pushout cell: image of an input cell, or a formal
// composite of two earlier result cells at some level.
struct CellDef {
  enum class Kind { FromLeft, FromRight, Composite };
  Kind kind = Kind::FromLeft;
  int index = -1;            // From*: cell index in X / Y
  int level = 0;             // Composite: comp_level(x, y)
  int x = -1, y = -1;        // Composite: operand result-cell indices
};

struct CompletionTrace {
  int rounds = 0;
  std::vector<std::string> added_cells;
  int bound = 0;
};

struct PushoutResult {
  FiniteStrictNCat result;
  FunctorMap from_left;   // X -> result
  FunctorMap from_right;  // Y -> result
  std::vector<CellDef> defs;  // one per result cell, topologically ordered
  CompletionTrace trace;
};

// Pushout of a span: quotient of the disjoint union by the apex
// identifications (congruence closure), then bounded saturation adjoining
// formal composites normalized by unit/associativity/interchange rewriting.
// The output passes validate; exceeding the completion bound raises
// ResourceError.
PushoutResult pushout(const SpanDiagram& d,
                      const Budget& budget = Budget::from_env());

// Glue the final object of X to the initial object of Y over the point.
PushoutResult wedge_at_endpoints(const FiniteStrictNCat& x,
                                 const FiniteStrictNCat& y,
                                 const Budget& budget = Budget::from_env());

// The functor result -> T induced by a compatible cocone (fx: X -> T,
// fy: Y -> T agreeing on the apex); composites are extended through the defs
// table.  Returns nullopt when the pair is incompatible or fails to extend.
std::optional<FunctorMap> induced_map(const PushoutResult& p,
                                      const FunctorMap& fx,
                                      const FunctorMap& fy);

// Finite surrogate for universality: for every T in tests, composition with
// the cocone must be a bijection from fun_enum(result, T) onto compatible
// pairs in fun_enum(X, T) x_{fun_enum(A, T)} fun_enum(Y, T).
bool verify_cocone_universal(const SpanDiagram& d, const PushoutResult& p,
                             const std::vector<FiniteStrictNCat>& tests,
                             std::string* witness = nullptr,
                             const Budget& budget = Budget::from_env());

// The span contracting the edges {0,2} and {1,3} of the 3-simplex to points;
// its pushout in Cat is the walking isomorphism.
SpanDiagram k_span();

}  // namespace nct
