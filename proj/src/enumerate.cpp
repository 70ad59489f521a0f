#include "nct/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace nct {

namespace {

// Cells ordered by dimension so that boundaries are always assigned before
// the cells they bound.
std::vector<int> assignment_order(const FiniteStrictNCat& a) {
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> d(a.size());
  for (int c = 0; c < a.size(); ++c) d[c] = a.dim(c);
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return d[u] < d[v]; });
  return order;
}

struct SearchTables {
  std::vector<int> order;
  std::vector<int> pos;  // cell -> position in order
  // comp entries (level, x, y, z) checked at the position where the last of
  // x, y, z gets assigned.
  std::vector<std::vector<std::array<int, 4>>> comp_at;
};

SearchTables make_tables(const FiniteStrictNCat& a) {
  SearchTables t;
  t.order = assignment_order(a);
  t.pos.resize(a.size());
  for (int p = 0; p < a.size(); ++p) t.pos[t.order[p]] = p;
  t.comp_at.resize(a.size());
  for (int i = 1; i <= a.n; ++i)
    for (const auto& [xy, z] : a.structures[i - 1].comp) {
      int last = std::max({t.pos[xy.first], t.pos[xy.second], t.pos[z]});
      t.comp_at[last].push_back({i, xy.first, xy.second, z});
    }
  return t;
}

bool boundary_ok(const FiniteStrictNCat& a, const FiniteStrictNCat& x,
                 const std::vector<int>& h, int c, int v) {
  for (int i = 1; i <= a.n; ++i) {
    int sc = a.src(i, c), tc = a.tgt(i, c);
    int sv = x.src(i, v), tv = x.tgt(i, v);
    if ((sc == c ? v : h[sc]) != sv) return false;
    if ((tc == c ? v : h[tc]) != tv) return false;
  }
  return true;
}

bool comps_ok(const FiniteStrictNCat& a, const FiniteStrictNCat& x,
              const std::vector<int>& h, const SearchTables& t, int p) {
  for (const auto& e : t.comp_at[p]) {
    auto w = x.comp(e[0], h[e[1]], h[e[2]]);
    if (!w || *w != h[e[3]]) return false;
  }
  return true;
}

void align(FiniteStrictNCat& a, FiniteStrictNCat& x) {
  int n = std::max(a.n, x.n);
  if (a.n < n) a = promote(a, n);
  if (x.n < n) x = promote(x, n);
}

}  // namespace

std::vector<FunctorMap> fun_enum(const FiniteStrictNCat& a0,
                                 const FiniteStrictNCat& x0,
                                 const Budget& budget) {
  FiniteStrictNCat a = a0, x = x0;
  align(a, x);
  std::vector<FunctorMap> out;
  if (a.size() == 0) {
    out.push_back(FunctorMap{a, x, {}});
    return out;
  }
  if (x.size() == 0) return out;

  SearchTables t = make_tables(a);
  std::vector<int> h(a.size(), -1);
  std::int64_t nodes = 0;

  auto search = [&](auto&& self, int p) -> void {
    if (p == a.size()) {
      out.push_back(FunctorMap{a, x, h});
      return;
    }
    int c = t.order[p];
    for (int v = 0; v < x.size(); ++v) {
      if (++nodes > budget.max_search_nodes)
        throw ResourceError("fun_enum: node budget " +
                            std::to_string(budget.max_search_nodes) +
                            " exceeded");
      h[c] = v;
      if (boundary_ok(a, x, h, c, v) && comps_ok(a, x, h, t, p))
        self(self, p + 1);
      h[c] = -1;
    }
  };
  search(search, 0);
  return out;
}

bool is_iso(const FiniteStrictNCat& a0, const FiniteStrictNCat& b0,
            FunctorMap* witness, const Budget& budget) {
  FiniteStrictNCat a = a0, b = b0;
  align(a, b);
  if (a.size() != b.size()) return false;
  std::map<int, int> da, db;
  std::vector<int> dim_a(a.size()), dim_b(b.size());
  for (int c = 0; c < a.size(); ++c) ++da[dim_a[c] = a.dim(c)];
  for (int c = 0; c < b.size(); ++c) ++db[dim_b[c] = b.dim(c)];
  if (da != db) return false;

  SearchTables t = make_tables(a);
  std::vector<int> h(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  std::int64_t nodes = 0;

  auto search = [&](auto&& self, int p) -> bool {
    if (p == a.size()) return true;
    int c = t.order[p];
    for (int v = 0; v < b.size(); ++v) {
      if (used[v] || dim_b[v] != dim_a[c]) continue;
      if (++nodes > budget.max_search_nodes)
        throw ResourceError("is_iso: node budget exceeded");
      h[c] = v;
      if (boundary_ok(a, b, h, c, v) && comps_ok(a, b, h, t, p)) {
        used[v] = true;
        if (self(self, p + 1)) return true;
        used[v] = false;
      }
      h[c] = -1;
    }
    return false;
  };
  if (search(search, 0)) {
    // A bijective functor between valid objects is invertible: it reflects
    // composability because it commutes with src/tgt.
    if (witness) *witness = FunctorMap{a, b, h};
    return true;
  }
  return false;
}

GauntReport is_gaunt(const FiniteStrictNCat& x, const Budget&) {
  GauntReport r;
  for (int k = 1; k <= x.n; ++k)
    for (int f = 0; f < x.size(); ++f) {
      if (x.is_identity_at(k, f)) continue;
      for (int g = 0; g < x.size(); ++g) {
        auto gf = x.comp(k, g, f);
        auto fg = x.comp(k, f, g);
        if (gf && fg && *gf == x.src(k, f) && *fg == x.tgt(k, f)) {
          r.gaunt = false;
          r.level = k;
          r.witness_cell = x.cells[f];
          r.witness_inverse = x.cells[g];
          return r;
        }
      }
    }
  r.gaunt = true;
  return r;
}

bool is_gaunt_by_locality(const FiniteStrictNCat& x, const Budget& budget) {
  for (int k = 1; k <= x.n; ++k) {
    FunctorMap collapse = to_point(walking_iso());  // E -> C_0 (ambient 1)
    for (int s = 1; s < k; ++s) collapse = suspension(collapse);
    // collapse: sigma^{k-1}E -> C_{k-1}, ambient k.
    FunctorMap c = promote(collapse, std::max(x.n, k));
    FiniteStrictNCat xx = promote(x, std::max(x.n, k));
    auto from_cell = fun_enum(c.target, xx, budget);
    auto from_e = fun_enum(c.source, xx, budget);
    if (from_cell.size() != from_e.size()) return false;
    std::set<std::vector<int>> images;
    for (const auto& f : from_cell) images.insert(compose(f, c).assignment);
    if (images.size() != from_e.size()) return false;
    for (const auto& g : from_e)
      if (!images.count(g.assignment)) return false;
  }
  return true;
}

FunctorMap factor_through(const FunctorMap& f, const FunctorMap& m) {
  std::vector<int> back(m.target.size(), -1);
  for (int b = 0; b < m.source.size(); ++b) {
    if (back[m.assignment[b]] >= 0)
      throw InputError("factor_through: map is not injective");
    back[m.assignment[b]] = b;
  }
  FunctorMap g{f.source, m.source, {}};
  g.assignment.resize(f.source.size());
  for (int c = 0; c < f.source.size(); ++c) {
    int v = back[f.assignment[c]];
    if (v < 0)
      throw InputError("factor_through: image not contained in subobject");
    g.assignment[c] = v;
  }
  return g;
}

std::vector<FunctorMap> sub_cell_inclusions(int j, int k) {
  if (j > k || j < 0) throw InputError("sub_cell_inclusions: bad dimensions");
  std::vector<FunctorMap> incs{identity_functor(cell(j))};
  for (int t = j + 1; t <= k; ++t) {
    // One-step inclusions C_{t-1} -> C_t: sigma^{t-1} of the two object
    // inclusions C_0 -> C_1.
    std::vector<FunctorMap> steps;
    for (int which : {1, 2}) {  // top, bottom of C_1
      FunctorMap s{cell(0), cell(1), {which}};
      for (int q = 1; q < t; ++q) s = suspension(s);
      steps.push_back(std::move(s));
    }
    std::vector<FunctorMap> next;
    std::set<std::vector<int>> seen;
    for (const auto& step : steps)
      for (const auto& e : incs) {
        FunctorMap comp_map = compose(step, e);
        if (seen.insert(comp_map.assignment).second)
          next.push_back(std::move(comp_map));
      }
    incs = std::move(next);
  }
  return incs;
}

CellMapClass classify_map_to_cell(const FunctorMap& f, int k) {
  std::set<int> image(f.assignment.begin(), f.assignment.end());
  for (int j = 0; j < k; ++j)
    for (const auto& inc : sub_cell_inclusions(j, k)) {
      std::set<int> sub(inc.assignment.begin(), inc.assignment.end());
      if (std::includes(sub.begin(), sub.end(), image.begin(), image.end()))
        return {true, j};
    }
  return {false, k};
}

namespace {

// Top/bottom of C_i sit at indices 2i-1, 2i.
bool susp_shape(const std::vector<int>& a, int i, int j) {
  return i >= 1 && j >= 1 && a[2 * i - 1] == 2 * j - 1 && a[2 * i] == 2 * j;
}

std::vector<int> desuspend_vec(const std::vector<int>& a, int i) {
  return std::vector<int>(a.begin(), a.begin() + 2 * i - 1);
}

}  // namespace

bool is_cell_suspension(const FunctorMap& f, int i, int j) {
  return susp_shape(f.assignment, i, j);
}

FunctorMap desuspend_cell_map(const FunctorMap& f, int i, int j) {
  if (!susp_shape(f.assignment, i, j))
    throw InputError("desuspend_cell_map: not a suspension");
  return FunctorMap{cell(i - 1), cell(j - 1), desuspend_vec(f.assignment, i)};
}

CellPullbackDecomposition decompose_cell_pullback(const FunctorMap& phi, int i,
                                                  const FunctorMap& psi, int k,
                                                  int j) {
  std::vector<int> a = phi.assignment, b = psi.assignment;
  CellPullbackDecomposition d{};
  int pi = i, pk = k, pj = j;
  while (pj >= 1 && susp_shape(a, pi, pj) && susp_shape(b, pk, pj)) {
    a = desuspend_vec(a, pi);
    b = desuspend_vec(b, pk);
    --pi;
    --pk;
    --pj;
    ++d.m;
  }
  if (pj >= 1 && susp_shape(a, pi, pj)) {
    std::swap(a, b);
    std::swap(pi, pk);
    d.swapped = true;
  }
  // Now a is no suspension: by the dichotomy for maps of cells it is constant
  // at an object of C_pj.
  for (int v : a)
    if (v != a[0])
      throw InternalError("decompose_cell_pullback: non-suspension map of cells is not constant");
  int o = a.empty() ? 0 : a[0];
  if (pj >= 1 && susp_shape(b, pk, pj)) {
    d.fiber_dim = 0;  // fiber of a suspension over either object is a point
  } else {
    for (int v : b)
      if (v != b[0])
        throw InternalError("decompose_cell_pullback: non-suspension map of cells is not constant");
    int o2 = b.empty() ? 0 : b[0];
    d.fiber_dim = (o2 == o) ? pk : -1;
  }
  if (d.fiber_dim < 0)
    d.tag = PullbackCase::Disjoint;
  else if (d.fiber_dim == 0)
    d.tag = PullbackCase::PointFiber;
  else if (pi == 0)
    d.tag = PullbackCase::DegenerateFactor;
  else {
    d.tag = PullbackCase::GenuineProduct;
    d.p = pi;
    d.l = d.fiber_dim;
  }
  return d;
}

}  // namespace nct
