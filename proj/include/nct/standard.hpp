#pragma once

#include <vector>

#include "nct/ncat.hpp"

namespace nct {

// Standard finite strict n-categories.  Constructors build at the smallest
// ambient dimension and callers promote as needed; every output validates.

// The empty category at ambient dimension n.
FiniteStrictNCat empty_ncat(int n = 0);

// The terminal object: one cell "pt", ambient dimension n.
FiniteStrictNCat point(int n = 0);

// Suspension: ambient dimension rises by one; two fresh 0-cells top/bottom
// become the objects, old cells become morphisms top -> bottom, and every
// old structure shifts up one level.
FiniteStrictNCat suspension(const FiniteStrictNCat& x);

// Suspension on maps: sigma(f): sigma(A) -> sigma(X), top -> top, bottom -> bottom.
FunctorMap suspension(const FunctorMap& f);

// Raise the ambient dimension to n by appending discrete structures
// (src = tgt = id, comp only on (c, c)).  No-op when n == x.n.
FiniteStrictNCat promote(const FiniteStrictNCat& x, int n);
FunctorMap promote(const FunctorMap& f, int n);

// The k-cell C_k = sigma^k(point): 2k+1 cells, ambient dimension k.
FiniteStrictNCat cell(int k);

// The boundary dC_k = sigma^k(empty): 2k cells, ambient dimension k.
FiniteStrictNCat boundary(int k);

// The walking isomorphism E: {x, y, f, g}, comp(g,f) = x, comp(f,g) = y.
// Ambient dimension 1.
FiniteStrictNCat walking_iso();

// The poset category [m] = Delta^[m]: (m+1)(m+2)/2 cells, ambient dimension 1.
// Objects named "0".."m"; the morphism i -> j (i < j) is named "i-j".
FiniteStrictNCat simplex(int m);

// Componentwise product; inputs must share ambient dimension.
// Cell (a, b) is named "(a,b)".  Projections available via product_proj.
FiniteStrictNCat product(const FiniteStrictNCat& x, const FiniteStrictNCat& y);
FunctorMap product_proj(const FiniteStrictNCat& x, const FiniteStrictNCat& y,
                        int which);  // 0 = left, 1 = right

// Disjoint union; cells prefixed "l:" / "r:".  Injections via coproduct_inj.
FiniteStrictNCat coproduct(const FiniteStrictNCat& x, const FiniteStrictNCat& y);
FunctorMap coproduct_inj(const FiniteStrictNCat& x, const FiniteStrictNCat& y,
                         int which);

// Fiber product of f: X -> Z, g: Y -> Z: the full substructure of X x Y on
// pairs with matching images.  Projections returned through the out-params
// when non-null.
FiniteStrictNCat fiber_product(const FunctorMap& f, const FunctorMap& g,
                               FunctorMap* proj_left = nullptr,
                               FunctorMap* proj_right = nullptr);

// The map Z -> W induced by u: Z -> X, v: Z -> Y when W carries projections
// pl: W -> X, pr: W -> Y that are jointly injective (products and fiber
// products).  Throws InputError when some (u(z), v(z)) has no preimage.
FunctorMap pair_into(const FiniteStrictNCat& w, const FunctorMap& pl,
                     const FunctorMap& pr, const FunctorMap& u,
                     const FunctorMap& v);

// r_I: swap src_i <-> tgt_i and flip comp_i argument order at each level i
// with flip[i-1] set.
FiniteStrictNCat opposite_r(const FiniteStrictNCat& x,
                            const std::vector<bool>& flip);

// Full substructure on the cells of dimension <= k (closed under all
// structure maps).
FiniteStrictNCat max_sub_k(const FiniteStrictNCat& x, int k);

// The unique 0-cell that is no src_1 (resp. tgt_1) of a positive-dimensional
// cell; throws InputError when absent or ambiguous.  For the cells C_k these
// are bottom (final) and top (initial); for simplices, m and 0.
int final_object(const FiniteStrictNCat& x);
int initial_object(const FiniteStrictNCat& x);

// The unique functor X -> point(n).
FunctorMap to_point(const FiniteStrictNCat& x);

// The functor point(n) -> X picking the 0-cell c.
FunctorMap from_point(const FiniteStrictNCat& x, int c);

}  // namespace nct
