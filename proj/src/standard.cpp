#include "nct/standard.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nct {

namespace {

CatStructure discrete_structure(int sz) {
  CatStructure st;
  st.src.resize(sz);
  st.tgt.resize(sz);
  for (int c = 0; c < sz; ++c) {
    st.src[c] = c;
    st.tgt[c] = c;
    st.comp[{c, c}] = c;
  }
  return st;
}

std::string fresh_name(const FiniteStrictNCat& x, std::string base) {
  while (x.index_of(base) >= 0) base += "'";
  return base;
}

}  // namespace

FiniteStrictNCat empty_ncat(int n) {
  FiniteStrictNCat x;
  x.n = n;
  x.structures.resize(n);
  return x;
}

FiniteStrictNCat point(int n) {
  FiniteStrictNCat x;
  x.n = n;
  x.cells = {"pt"};
  for (int i = 0; i < n; ++i) x.structures.push_back(discrete_structure(1));
  return x;
}

FiniteStrictNCat suspension(const FiniteStrictNCat& x) {
  FiniteStrictNCat s;
  s.n = x.n + 1;
  s.cells = x.cells;
  const int old = x.size();
  std::string tn = fresh_name(x, "T" + std::to_string(s.n));
  std::string bn = fresh_name(x, "B" + std::to_string(s.n));
  s.cells.push_back(tn);
  s.cells.push_back(bn);
  const int top = old, bot = old + 1;

  CatStructure s1;
  s1.src.resize(old + 2);
  s1.tgt.resize(old + 2);
  for (int c = 0; c < old; ++c) {
    s1.src[c] = top;
    s1.tgt[c] = bot;
  }
  s1.src[top] = top;
  s1.tgt[top] = top;
  s1.src[bot] = bot;
  s1.tgt[bot] = bot;
  s1.comp[{top, top}] = top;
  s1.comp[{bot, bot}] = bot;
  for (int c = 0; c < old; ++c) {
    s1.comp[{c, top}] = c;  // src_1(c) = top = tgt_1(top)
    s1.comp[{bot, c}] = c;  // src_1(bot) = bot = tgt_1(c)
  }
  s.structures.push_back(std::move(s1));

  for (int i = 1; i <= x.n; ++i) {
    CatStructure st;
    st.src.resize(old + 2);
    st.tgt.resize(old + 2);
    for (int c = 0; c < old; ++c) {
      st.src[c] = x.src(i, c);
      st.tgt[c] = x.tgt(i, c);
    }
    st.src[top] = top;
    st.tgt[top] = top;
    st.src[bot] = bot;
    st.tgt[bot] = bot;
    st.comp = x.structures[i - 1].comp;
    st.comp[{top, top}] = top;
    st.comp[{bot, bot}] = bot;
    s.structures.push_back(std::move(st));
  }
  return s;
}

FunctorMap suspension(const FunctorMap& f) {
  FunctorMap g{suspension(f.source), suspension(f.target), {}};
  const int old_src = f.source.size(), old_tgt = f.target.size();
  g.assignment.resize(old_src + 2);
  for (int c = 0; c < old_src; ++c) g.assignment[c] = f.assignment[c];
  g.assignment[old_src] = old_tgt;          // top -> top
  g.assignment[old_src + 1] = old_tgt + 1;  // bottom -> bottom
  return g;
}

FiniteStrictNCat promote(const FiniteStrictNCat& x, int n) {
  if (n < x.n)
    throw InputError("promote: cannot lower ambient dimension from " +
                     std::to_string(x.n) + " to " + std::to_string(n));
  FiniteStrictNCat y = x;
  y.n = n;
  while (static_cast<int>(y.structures.size()) < n)
    y.structures.push_back(discrete_structure(y.size()));
  return y;
}

FunctorMap promote(const FunctorMap& f, int n) {
  return {promote(f.source, n), promote(f.target, n), f.assignment};
}

FiniteStrictNCat cell(int k) {
  FiniteStrictNCat x = point(0);
  for (int i = 0; i < k; ++i) x = suspension(x);
  return x;
}

FiniteStrictNCat boundary(int k) {
  FiniteStrictNCat x = empty_ncat(0);
  for (int i = 0; i < k; ++i) x = suspension(x);
  return x;
}

FiniteStrictNCat walking_iso() {
  FiniteStrictNCat e;
  e.n = 1;
  e.cells = {"x", "y", "f", "g"};
  CatStructure st;
  st.src = {0, 1, 0, 1};  // f: x -> y, g: y -> x
  st.tgt = {0, 1, 1, 0};
  st.comp[{0, 0}] = 0;
  st.comp[{1, 1}] = 1;
  st.comp[{2, 0}] = 2;  // f after id_x
  st.comp[{1, 2}] = 2;  // id_y after f
  st.comp[{3, 1}] = 3;
  st.comp[{0, 3}] = 3;
  st.comp[{3, 2}] = 0;  // g after f = id_x
  st.comp[{2, 3}] = 1;  // f after g = id_y
  e.structures.push_back(std::move(st));
  return e;
}

FiniteStrictNCat simplex(int m) {
  if (m < 0) throw InputError("simplex: m must be nonnegative");
  FiniteStrictNCat x;
  x.n = 1;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      id[{i, j}] = x.size();
      x.cells.push_back(i == j ? std::to_string(i)
                               : std::to_string(i) + "-" + std::to_string(j));
    }
  CatStructure st;
  st.src.resize(x.size());
  st.tgt.resize(x.size());
  for (const auto& [ij, c] : id) {
    st.src[c] = id[{ij.first, ij.first}];
    st.tgt[c] = id[{ij.second, ij.second}];
  }
  for (const auto& [jk, a] : id)
    for (int i = 0; i <= jk.first; ++i)
      st.comp[{a, id[{i, jk.first}]}] = id[{i, jk.second}];
  x.structures.push_back(std::move(st));
  return x;
}

FiniteStrictNCat product(const FiniteStrictNCat& x, const FiniteStrictNCat& y) {
  if (x.n != y.n) throw InputError("product: ambient dimensions differ");
  FiniteStrictNCat p;
  p.n = x.n;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      p.cells.push_back("(" + x.cells[a] + "," + y.cells[b] + ")");
  auto pair = [&](int a, int b) { return a * y.size() + b; };
  for (int i = 1; i <= p.n; ++i) {
    CatStructure st;
    st.src.resize(p.cells.size());
    st.tgt.resize(p.cells.size());
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < y.size(); ++b) {
        st.src[pair(a, b)] = pair(x.src(i, a), y.src(i, b));
        st.tgt[pair(a, b)] = pair(x.tgt(i, a), y.tgt(i, b));
      }
    for (const auto& [uv, w] : x.structures[i - 1].comp)
      for (const auto& [st2, r] : y.structures[i - 1].comp)
        st.comp[{pair(uv.first, st2.first), pair(uv.second, st2.second)}] =
            pair(w, r);
    p.structures.push_back(std::move(st));
  }
  return p;
}

FunctorMap product_proj(const FiniteStrictNCat& x, const FiniteStrictNCat& y,
                        int which) {
  FiniteStrictNCat p = product(x, y);
  FunctorMap f{p, which == 0 ? x : y, {}};
  f.assignment.resize(p.size());
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      f.assignment[a * y.size() + b] = which == 0 ? a : b;
  return f;
}

FiniteStrictNCat coproduct(const FiniteStrictNCat& x, const FiniteStrictNCat& y) {
  if (x.n != y.n) throw InputError("coproduct: ambient dimensions differ");
  FiniteStrictNCat u;
  u.n = x.n;
  for (const auto& c : x.cells) u.cells.push_back("l:" + c);
  for (const auto& c : y.cells) u.cells.push_back("r:" + c);
  const int off = x.size();
  for (int i = 1; i <= u.n; ++i) {
    CatStructure st;
    st.src.resize(u.cells.size());
    st.tgt.resize(u.cells.size());
    for (int c = 0; c < x.size(); ++c) {
      st.src[c] = x.src(i, c);
      st.tgt[c] = x.tgt(i, c);
    }
    for (int c = 0; c < y.size(); ++c) {
      st.src[off + c] = off + y.src(i, c);
      st.tgt[off + c] = off + y.tgt(i, c);
    }
    for (const auto& [ab, z] : x.structures[i - 1].comp) st.comp[ab] = z;
    for (const auto& [ab, z] : y.structures[i - 1].comp)
      st.comp[{off + ab.first, off + ab.second}] = off + z;
    u.structures.push_back(std::move(st));
  }
  return u;
}

FunctorMap coproduct_inj(const FiniteStrictNCat& x, const FiniteStrictNCat& y,
                         int which) {
  FiniteStrictNCat u = coproduct(x, y);
  FunctorMap f{which == 0 ? x : y, u, {}};
  const int off = which == 0 ? 0 : x.size();
  const int sz = which == 0 ? x.size() : y.size();
  f.assignment.resize(sz);
  for (int c = 0; c < sz; ++c) f.assignment[c] = off + c;
  return f;
}

FiniteStrictNCat fiber_product(const FunctorMap& f, const FunctorMap& g,
                               FunctorMap* proj_left, FunctorMap* proj_right) {
  const FiniteStrictNCat& x = f.source;
  const FiniteStrictNCat& y = g.source;
  if (f.target.cells != g.target.cells || f.target.n != g.target.n)
    throw InputError("fiber_product: codomains differ");
  if (x.n != y.n) throw InputError("fiber_product: ambient dimensions differ");
  FiniteStrictNCat p;
  p.n = x.n;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      if (f.assignment[a] == g.assignment[b]) {
        id[{a, b}] = p.size();
        pairs.push_back({a, b});
        p.cells.push_back("(" + x.cells[a] + "," + y.cells[b] + ")");
      }
  for (int i = 1; i <= p.n; ++i) {
    CatStructure st;
    st.src.resize(p.cells.size());
    st.tgt.resize(p.cells.size());
    for (const auto& [ab, c] : id) {
      st.src[c] = id.at({x.src(i, ab.first), y.src(i, ab.second)});
      st.tgt[c] = id.at({x.tgt(i, ab.first), y.tgt(i, ab.second)});
    }
    for (const auto& [uv, w] : x.structures[i - 1].comp)
      for (const auto& [ab, r] : y.structures[i - 1].comp) {
        auto p1 = id.find({uv.first, ab.first});
        auto p2 = id.find({uv.second, ab.second});
        if (p1 == id.end() || p2 == id.end()) continue;
        st.comp[{p1->second, p2->second}] = id.at({w, r});
      }
    p.structures.push_back(std::move(st));
  }
  if (proj_left) {
    *proj_left = {p, x, {}};
    proj_left->assignment.resize(p.size());
    for (int c = 0; c < p.size(); ++c)
      proj_left->assignment[c] = pairs[c].first;
  }
  if (proj_right) {
    *proj_right = {p, y, {}};
    proj_right->assignment.resize(p.size());
    for (int c = 0; c < p.size(); ++c)
      proj_right->assignment[c] = pairs[c].second;
  }
  return p;
}

FiniteStrictNCat opposite_r(const FiniteStrictNCat& x,
                            const std::vector<bool>& flip) {
  if (static_cast<int>(flip.size()) != x.n)
    throw InputError("opposite_r: flip vector must have length n");
  FiniteStrictNCat y = x;
  for (int i = 1; i <= x.n; ++i) {
    if (!flip[i - 1]) continue;
    CatStructure& st = y.structures[i - 1];
    std::swap(st.src, st.tgt);
    std::map<std::pair<int, int>, int> rev;
    for (const auto& [ab, z] : st.comp) rev[{ab.second, ab.first}] = z;
    st.comp = std::move(rev);
  }
  return y;
}

FiniteStrictNCat max_sub_k(const FiniteStrictNCat& x, int k) {
  if (k < 0 || k > x.n) throw InputError("max_sub_k: k out of range");
  std::vector<int> keep = x.cells_of_dim_le(k);
  std::vector<int> where(x.size(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) where[keep[i]] = i;
  FiniteStrictNCat y;
  y.n = x.n;
  for (int c : keep) y.cells.push_back(x.cells[c]);
  for (int i = 1; i <= x.n; ++i) {
    CatStructure st;
    st.src.resize(keep.size());
    st.tgt.resize(keep.size());
    for (int c = 0; c < static_cast<int>(keep.size()); ++c) {
      st.src[c] = where[x.src(i, keep[c])];
      st.tgt[c] = where[x.tgt(i, keep[c])];
    }
    for (const auto& [ab, z] : x.structures[i - 1].comp)
      if (where[ab.first] >= 0 && where[ab.second] >= 0)
        st.comp[{where[ab.first], where[ab.second]}] = where[z];
    y.structures.push_back(std::move(st));
  }
  return y;
}

namespace {

int extreme_object(const FiniteStrictNCat& x, bool final_side) {
  std::set<int> excluded;
  for (int c = 0; c < x.size(); ++c)
    if (x.dim(c) >= 1)
      excluded.insert(final_side ? x.src(1, c) : x.tgt(1, c));
  int found = -1;
  for (int c = 0; c < x.size(); ++c) {
    if (x.dim(c) != 0 || excluded.count(c)) continue;
    if (found >= 0)
      throw InputError(std::string(final_side ? "final" : "initial") +
                       "_object: not unique");
    found = c;
  }
  if (found < 0)
    throw InputError(std::string(final_side ? "final" : "initial") +
                     "_object: none exists");
  return found;
}

}  // namespace

int final_object(const FiniteStrictNCat& x) { return extreme_object(x, true); }
int initial_object(const FiniteStrictNCat& x) { return extreme_object(x, false); }

FunctorMap to_point(const FiniteStrictNCat& x) {
  FunctorMap f{x, point(x.n), {}};
  f.assignment.assign(x.size(), 0);
  return f;
}

FunctorMap from_point(const FiniteStrictNCat& x, int c) {
  if (c < 0 || c >= x.size() || x.dim(c) != 0)
    throw InputError("from_point: cell is not an object");
  FunctorMap f{point(x.n), x, {c}};
  return f;
}

FunctorMap pair_into(const FiniteStrictNCat& w, const FunctorMap& pl,
                     const FunctorMap& pr, const FunctorMap& u,
                     const FunctorMap& v) {
  std::map<std::pair<int, int>, int> lookup;
  for (int c = 0; c < w.size(); ++c)
    lookup[{pl.assignment[c], pr.assignment[c]}] = c;
  FunctorMap h{u.source, w, {}};
  h.assignment.resize(u.source.size());
  for (int z = 0; z < u.source.size(); ++z) {
    auto it = lookup.find({u.assignment[z], v.assignment[z]});
    if (it == lookup.end())
      throw InputError("pair_into: component pair outside the target");
    h.assignment[z] = it->second;
  }
  return h;
}

}  // namespace nct
