#include "nct/colimit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nct/enumerate.hpp"
#include "nct/standard.hpp"

namespace nct {

namespace {

std::string fresh(const std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "'";
  return base;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Smaller index wins: keeps representatives deterministic.
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Mutable category under saturation.  Formal composites are keyed by their
// fully flattened factor chain so differently associated composites coincide.
struct Builder {
  int n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> src, tgt;  // [level-1][cell]
  std::vector<std::map<std::pair<int, int>, int>> comp;
  std::vector<CellDef> defs;
  std::vector<int> formal_level;  // -1 when the cell is not a formal composite
  std::vector<std::vector<int>> formal_chain;
  std::map<std::pair<int, std::vector<int>>, int> registry;
  std::set<std::string> used;  // all names, to keep composite names fresh
  CompletionTrace trace;
  const Budget* budget = nullptr;

  bool is_id(int i, int c) const { return src[i - 1][c] == c; }
  int table(int i, int x, int y) const {
    auto it = comp[i - 1].find({x, y});
    return it == comp[i - 1].end() ? -1 : it->second;
  }

  int size() const { return static_cast<int>(names.size()); }

  int normalize(int i, int x, int y);
  int fold(int i, const std::vector<int>& chain);
  int create(int i, std::vector<int> chain, int def_x, int def_y);
};

int Builder::fold(int i, const std::vector<int>& chain) {
  int r = chain.back();
  for (int t = static_cast<int>(chain.size()) - 2; t >= 0; --t)
    r = normalize(i, chain[t], r);
  return r;
}

int Builder::normalize(int i, int x, int y) {
  if (is_id(i, x)) return y;  // x = src_i(x) = tgt_i(y), a unit for y
  if (is_id(i, y)) return x;
  if (int z = table(i, x, y); z >= 0) return z;

  // Interchange: a level-i composite of two aligned level-L composites
  // (L < i) rewrites to the level-L composite of pairwise level-i composites.
  // Without this, vertical composites of whiskers would not meet their
  // diagonal and validation would fail on grid-shaped gluings.
  if (formal_level[x] >= 0 && formal_level[x] == formal_level[y] &&
      formal_level[x] < i &&
      formal_chain[x].size() == formal_chain[y].size()) {
    const auto &cx = formal_chain[x], &cy = formal_chain[y];
    bool aligned = true;
    for (size_t t = 0; t < cx.size(); ++t)
      if (src[i - 1][cx[t]] != tgt[i - 1][cy[t]]) aligned = false;
    if (aligned) {
      std::vector<int> zs;
      for (size_t t = 0; t < cx.size(); ++t)
        zs.push_back(normalize(i, cx[t], cy[t]));
      int r = fold(formal_level[x], zs);
      comp[i - 1][{x, y}] = r;
      return r;
    }
  }

  std::vector<int> chain;
  auto expand = [&](int c) {
    if (formal_level[c] == i)
      for (int e : formal_chain[c]) chain.push_back(e);
    else
      chain.push_back(c);
  };
  expand(x);
  expand(y);

  // Reduce adjacent pairs through entries whose result is not itself a
  // formal level-i composite (those results are stable over time), dropping
  // identity factors by the unit laws.
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (size_t t = 0; t + 1 < chain.size(); ++t) {
      int z = table(i, chain[t], chain[t + 1]);
      if (z >= 0 && formal_level[z] != i) {
        chain[t] = z;
        chain.erase(chain.begin() + t + 1);
        reduced = true;
        break;
      }
    }
    for (size_t t = 0; chain.size() > 1 && t < chain.size(); ++t)
      if (is_id(i, chain[t])) {
        chain.erase(chain.begin() + t);
        reduced = true;
        break;
      }
  }

  int r;
  if (chain.size() == 1) {
    r = chain[0];
  } else if (auto it = registry.find({i, chain}); it != registry.end()) {
    r = it->second;
  } else {
    r = create(i, std::move(chain), x, y);
  }
  comp[i - 1][{x, y}] = r;
  return r;
}

int Builder::create(int i, std::vector<int> chain, int def_x, int def_y) {
  int c = size();
  if (c + 1 > budget->max_cells)
    throw ResourceError("pushout: cell budget " +
                        std::to_string(budget->max_cells) + " exceeded");
  std::string name = "*" + std::to_string(i) + "(";
  for (size_t t = 0; t < chain.size(); ++t)
    name += (t ? "," : "") + names[chain[t]];
  name += ")";
  // Inputs built by earlier pushouts may already carry composite names.
  name = fresh(used, name);
  used.insert(name);
  names.push_back(name);
  trace.added_cells.push_back(name);
  for (int j = 1; j <= n; ++j) {
    src[j - 1].push_back(c);
    tgt[j - 1].push_back(c);
  }
  formal_level.push_back(i);
  formal_chain.push_back(chain);
  CellDef d;
  d.kind = CellDef::Kind::Composite;
  d.level = i;
  d.x = def_x;
  d.y = def_y;
  defs.push_back(d);
  registry[{i, chain}] = c;

  src[i - 1][c] = src[i - 1][chain.back()];
  tgt[i - 1][c] = tgt[i - 1][chain.front()];
  for (int j = 1; j < i; ++j) {
    src[j - 1][c] = src[j - 1][chain.front()];
    tgt[j - 1][c] = tgt[j - 1][chain.front()];
  }
  for (int j = i + 1; j <= n; ++j) {
    std::vector<int> ss, tt;
    for (int e : chain) {
      ss.push_back(src[j - 1][e]);
      tt.push_back(tgt[j - 1][e]);
    }
    src[j - 1][c] = fold(i, ss);
    tgt[j - 1][c] = fold(i, tt);
  }
  return c;
}

}  // namespace

PushoutResult pushout(const SpanDiagram& d, const Budget& budget) {
  int n = std::max({d.apex.n, d.left.target.n, d.right.target.n});
  FiniteStrictNCat a = promote(d.apex, n);
  FiniteStrictNCat x = promote(d.left.target, n);
  FiniteStrictNCat y = promote(d.right.target, n);
  if (!is_functor(a, x, d.left.assignment) ||
      !is_functor(a, y, d.right.assignment))
    throw InputError("pushout: span legs are not functors");

  // Disjoint union with fresh right-hand names.
  const int off = x.size();
  const int total = x.size() + y.size();
  std::vector<std::string> unames = x.cells;
  {
    std::set<std::string> used(x.cells.begin(), x.cells.end());
    for (const auto& c : y.cells) {
      std::string nm = fresh(used, c);
      used.insert(nm);
      unames.push_back(nm);
    }
  }
  auto usrc = [&](int i, int c) {
    return c < off ? x.src(i, c) : off + y.src(i, c - off);
  };
  auto utgt = [&](int i, int c) {
    return c < off ? x.tgt(i, c) : off + y.tgt(i, c - off);
  };

  UnionFind uf(total);
  for (int c = 0; c < a.size(); ++c)
    uf.unite(d.left.assignment[c], off + d.right.assignment[c]);

  // Congruence closure: structure maps and composition must become
  // well-defined on classes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      std::map<int, int> srep, trep;
      for (int c = 0; c < total; ++c) {
        int r = uf.find(c);
        int s = uf.find(usrc(i, c)), t = uf.find(utgt(i, c));
        auto is_ = srep.find(r);
        if (is_ == srep.end())
          srep[r] = s;
        else if (is_->second != s)
          changed |= uf.unite(is_->second, s);
        auto it_ = trep.find(r);
        if (it_ == trep.end())
          trep[r] = t;
        else if (it_->second != t)
          changed |= uf.unite(it_->second, t);
      }
      std::map<std::pair<int, int>, int> crep;
      auto feed = [&](int cx, int cy, int cz) {
        std::pair<int, int> key{uf.find(cx), uf.find(cy)};
        int z = uf.find(cz);
        auto it = crep.find(key);
        if (it == crep.end())
          crep[key] = z;
        else if (it->second != z)
          changed |= uf.unite(it->second, z);
      };
      for (const auto& [xy, z] : x.structures[i - 1].comp)
        feed(xy.first, xy.second, z);
      for (const auto& [xy, z] : y.structures[i - 1].comp)
        feed(off + xy.first, off + xy.second, off + z);
    }
  }

  // Quotient, classes ordered by least member.
  std::vector<int> cls(total, -1);
  std::vector<int> rep;  // class -> least member
  for (int c = 0; c < total; ++c) {
    int r = uf.find(c);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    cls[c] = cls[r];
  }

  Builder b;
  b.n = n;
  b.budget = &budget;
  b.src.resize(n);
  b.tgt.resize(n);
  b.comp.resize(n);
  for (size_t q = 0; q < rep.size(); ++q) {
    std::string least = unames[rep[q]];
    for (int c = 0; c < total; ++c)
      if (cls[c] == static_cast<int>(q)) least = std::min(least, unames[c]);
    b.names.push_back(least);
    b.used.insert(least);
    b.formal_level.push_back(-1);
    b.formal_chain.push_back({});
    CellDef def;
    int m = rep[q];
    if (m < off) {
      def.kind = CellDef::Kind::FromLeft;
      def.index = m;
    } else {
      def.kind = CellDef::Kind::FromRight;
      def.index = m - off;
    }
    b.defs.push_back(def);
    for (int i = 1; i <= n; ++i) {
      b.src[i - 1].push_back(cls[usrc(i, rep[q])]);
      b.tgt[i - 1].push_back(cls[utgt(i, rep[q])]);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (const auto& [xy, z] : x.structures[i - 1].comp)
      b.comp[i - 1][{cls[xy.first], cls[xy.second]}] = cls[z];
    for (const auto& [xy, z] : y.structures[i - 1].comp)
      b.comp[i - 1][{cls[off + xy.first], cls[off + xy.second]}] =
          cls[off + z];
  }

  // Saturation: adjoin normalized formal composites until the composition
  // tables are total on composable pairs.
  b.trace.bound = budget.max_completion_rounds;
  while (true) {
    bool added = false;
    int sz = b.size();
    for (int i = 1; i <= n; ++i)
      for (int cx = 0; cx < sz; ++cx)
        for (int cy = 0; cy < sz; ++cy) {
          if (b.src[i - 1][cx] != b.tgt[i - 1][cy]) continue;
          if (b.table(i, cx, cy) >= 0) continue;
          b.comp[i - 1][{cx, cy}] = b.normalize(i, cx, cy);
          added = true;
        }
    if (b.size() > sz) added = true;
    if (!added) break;
    if (++b.trace.rounds > budget.max_completion_rounds)
      throw ResourceError("pushout: completion bound " +
                          std::to_string(budget.max_completion_rounds) +
                          " rounds exceeded (" + std::to_string(b.size()) +
                          " cells so far)");
  }

  PushoutResult out;
  out.result.n = n;
  out.result.cells = b.names;
  for (int i = 1; i <= n; ++i) {
    CatStructure st;
    st.src = b.src[i - 1];
    st.tgt = b.tgt[i - 1];
    st.comp = b.comp[i - 1];
    out.result.structures.push_back(std::move(st));
  }
  require_valid(out.result, "pushout");
  out.defs = b.defs;
  out.trace = b.trace;
  out.from_left = FunctorMap{x, out.result, {}};
  out.from_left.assignment.assign(cls.begin(), cls.begin() + off);
  out.from_right = FunctorMap{y, out.result, {}};
  out.from_right.assignment.assign(cls.begin() + off, cls.end());
  return out;
}

PushoutResult wedge_at_endpoints(const FiniteStrictNCat& x,
                                 const FiniteStrictNCat& y,
                                 const Budget& budget) {
  int n = std::max(x.n, y.n);
  FiniteStrictNCat xx = promote(x, n), yy = promote(y, n);
  SpanDiagram d;
  d.apex = point(n);
  d.left = from_point(xx, final_object(xx));
  d.right = from_point(yy, initial_object(yy));
  return pushout(d, budget);
}

std::optional<FunctorMap> induced_map(const PushoutResult& p,
                                      const FunctorMap& fx,
                                      const FunctorMap& fy) {
  if (fx.target.cells != fy.target.cells) return std::nullopt;
  FiniteStrictNCat t = promote(fx.target, p.result.n);
  std::vector<int> h(p.result.size(), -1);
  for (int c = 0; c < p.result.size(); ++c) {
    const CellDef& d = p.defs[c];
    switch (d.kind) {
      case CellDef::Kind::FromLeft:
        h[c] = fx.assignment[d.index];
        break;
      case CellDef::Kind::FromRight:
        h[c] = fy.assignment[d.index];
        break;
      case CellDef::Kind::Composite: {
        auto z = t.comp(d.level, h[d.x], h[d.y]);
        if (!z) return std::nullopt;
        h[c] = *z;
        break;
      }
    }
  }
  // The cocone pair must be recovered exactly and the extension must itself
  // be a functor.
  for (int c = 0; c < p.from_left.source.size(); ++c)
    if (h[p.from_left.assignment[c]] != fx.assignment[c]) return std::nullopt;
  for (int c = 0; c < p.from_right.source.size(); ++c)
    if (h[p.from_right.assignment[c]] != fy.assignment[c]) return std::nullopt;
  if (!is_functor(p.result, t, h)) return std::nullopt;
  return FunctorMap{p.result, t, h};
}

bool verify_cocone_universal(const SpanDiagram& d, const PushoutResult& p,
                             const std::vector<FiniteStrictNCat>& tests,
                             std::string* witness, const Budget& budget) {
  for (const auto& t0 : tests) {
    int n = std::max(p.result.n, t0.n);
    FiniteStrictNCat t = promote(t0, n);
    auto hs = fun_enum(promote(p.result, n), t, budget);
    auto fxs = fun_enum(promote(d.left.target, n), t, budget);
    auto fys = fun_enum(promote(d.right.target, n), t, budget);
    std::set<std::pair<std::vector<int>, std::vector<int>>> compatible;
    for (const auto& fx : fxs)
      for (const auto& fy : fys) {
        bool agree = true;
        for (int c = 0; c < d.apex.size() && agree; ++c)
          agree = fx.assignment[d.left.assignment[c]] ==
                  fy.assignment[d.right.assignment[c]];
        if (agree) compatible.insert({fx.assignment, fy.assignment});
      }
    std::set<std::pair<std::vector<int>, std::vector<int>>> hit;
    for (const auto& h : hs) {
      std::vector<int> lx(p.from_left.source.size()),
          ly(p.from_right.source.size());
      for (size_t c = 0; c < lx.size(); ++c)
        lx[c] = h.assignment[p.from_left.assignment[c]];
      for (size_t c = 0; c < ly.size(); ++c)
        ly[c] = h.assignment[p.from_right.assignment[c]];
      if (!hit.insert({lx, ly}).second) {
        if (witness)
          *witness = "two distinct maps out of the pushout restrict to the "
                     "same cocone pair on test '" +
                     std::to_string(&t0 - tests.data()) + "'";
        return false;
      }
    }
    if (hit != compatible) {
      if (witness)
        *witness = "cocone pairs (" + std::to_string(compatible.size()) +
                   ") and induced maps (" + std::to_string(hit.size()) +
                   ") disagree on test object " +
                   std::to_string(&t0 - tests.data());
      return false;
    }
  }
  return true;
}

SpanDiagram k_span() {
  SpanDiagram d;
  FiniteStrictNCat s1 = simplex(1);
  d.apex = coproduct(s1, s1);
  FiniteStrictNCat s3 = simplex(3);
  FiniteStrictNCat pts = coproduct(promote(point(0), 1), promote(point(0), 1));
  auto ix = [&](const FiniteStrictNCat& c, const std::string& nm) {
    int k = c.index_of(nm);
    if (k < 0) throw InternalError("k_span: missing cell " + nm);
    return k;
  };
  d.left = FunctorMap{d.apex, s3, std::vector<int>(d.apex.size())};
  d.left.assignment[ix(d.apex, "l:0")] = ix(s3, "0");
  d.left.assignment[ix(d.apex, "l:0-1")] = ix(s3, "0-2");
  d.left.assignment[ix(d.apex, "l:1")] = ix(s3, "2");
  d.left.assignment[ix(d.apex, "r:0")] = ix(s3, "1");
  d.left.assignment[ix(d.apex, "r:0-1")] = ix(s3, "1-3");
  d.left.assignment[ix(d.apex, "r:1")] = ix(s3, "3");
  d.right = FunctorMap{d.apex, pts, std::vector<int>(d.apex.size())};
  d.right.assignment[ix(d.apex, "l:0")] = ix(pts, "l:pt");
  d.right.assignment[ix(d.apex, "l:0-1")] = ix(pts, "l:pt");
  d.right.assignment[ix(d.apex, "l:1")] = ix(pts, "l:pt");
  d.right.assignment[ix(d.apex, "r:0")] = ix(pts, "r:pt");
  d.right.assignment[ix(d.apex, "r:0-1")] = ix(pts, "r:pt");
  d.right.assignment[ix(d.apex, "r:1")] = ix(pts, "r:pt");
  return d;
}

}  // namespace nct
