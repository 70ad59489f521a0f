#include "nct/theta.hpp"

#include <algorithm>
#include <map>

#include "nct/enumerate.hpp"
#include "nct/standard.hpp"

namespace nct {

bool operator==(const ThetaObj& a, const ThetaObj& b) {
  return a.level == b.level && a.m == b.m && a.children == b.children;
}

bool operator<(const ThetaObj& a, const ThetaObj& b) {
  if (a.level != b.level) return a.level < b.level;
  if (a.m != b.m) return a.m < b.m;
  return a.children < b.children;
}

bool operator==(const ThetaMor& a, const ThetaMor& b) {
  return a.dom == b.dom && a.cod == b.cod && a.phi == b.phi &&
         a.comps == b.comps;
}

std::string theta_print(const ThetaObj& o) {
  std::string s = "[" + std::to_string(o.m);
  if (o.level > 1) {
    s += ";";
    for (int i = 0; i < o.m; ++i)
      s += (i ? "," : "") + theta_print(o.children[i]);
  }
  s += "]";
  return s;
}

namespace {

ThetaObj parse_at(const std::string& t, size_t& p) {
  auto skip = [&] { while (p < t.size() && isspace(t[p])) ++p; };
  skip();
  if (p >= t.size() || t[p] != '[') throw InputError("theta_parse: expected '['");
  ++p;
  skip();
  size_t start = p;
  while (p < t.size() && isdigit(t[p])) ++p;
  if (p == start) throw InputError("theta_parse: expected arity");
  int m = std::stoi(t.substr(start, p - start));
  ThetaObj o;
  o.m = m;
  skip();
  if (p < t.size() && t[p] == ']') {
    ++p;
    o.level = 1;
    return o;
  }
  if (p >= t.size() || t[p] != ';') throw InputError("theta_parse: expected ';' or ']'");
  ++p;
  for (int i = 0; i < m; ++i) {
    if (i) {
      skip();
      if (p >= t.size() || t[p] != ',') throw InputError("theta_parse: expected ','");
      ++p;
    }
    o.children.push_back(parse_at(t, p));
  }
  skip();
  if (p >= t.size() || t[p] != ']') throw InputError("theta_parse: expected ']'");
  ++p;
  // A childless "[0;]" is read at level 2; deeper levels must be built in
  // code or inferred from siblings.
  o.level = o.children.empty() ? 2 : o.children[0].level + 1;
  for (const auto& c : o.children)
    if (c.level != o.level - 1)
      throw InputError("theta_parse: children at inconsistent levels");
  return o;
}

}  // namespace

ThetaObj theta_parse(const std::string& text) {
  size_t p = 0;
  ThetaObj o = parse_at(text, p);
  while (p < text.size() && isspace(text[p])) ++p;
  if (p != text.size()) throw InputError("theta_parse: trailing input");
  return o;
}

int theta_size(const ThetaObj& o) {
  if (o.level == 1) return o.m + 1;
  int s = 1;
  for (const auto& c : o.children) s += theta_size(c);
  return s;
}

ThetaMor theta_identity(const ThetaObj& o) {
  ThetaMor f;
  f.dom = o;
  f.cod = o;
  f.phi.resize(o.m + 1);
  for (int i = 0; i <= o.m; ++i) f.phi[i] = i;
  if (o.level > 1)
    for (int i = 1; i <= o.m; ++i)
      f.comps.push_back({theta_identity(o.children[i - 1])});
  return f;
}

bool theta_valid_mor(const ThetaMor& f) {
  const int m = f.dom.m, mp = f.cod.m;
  if (f.dom.level != f.cod.level) return false;
  if (static_cast<int>(f.phi.size()) != m + 1) return false;
  for (int i = 0; i <= m; ++i) {
    if (f.phi[i] < 0 || f.phi[i] > mp) return false;
    if (i && f.phi[i - 1] > f.phi[i]) return false;
  }
  if (f.dom.level == 1) return f.comps.empty();
  if (static_cast<int>(f.comps.size()) != m) return false;
  for (int i = 1; i <= m; ++i) {
    int lo = f.phi[i - 1], hi = f.phi[i];
    if (static_cast<int>(f.comps[i - 1].size()) != hi - lo) return false;
    for (int j = lo + 1; j <= hi; ++j) {
      const ThetaMor& c = f.comps[i - 1][j - lo - 1];
      if (c.dom != f.dom.children[i - 1] || c.cod != f.cod.children[j - 1])
        return false;
      if (!theta_valid_mor(c)) return false;
    }
  }
  return true;
}

ThetaMor theta_compose(const ThetaMor& g, const ThetaMor& f) {
  if (f.cod != g.dom) throw InputError("theta_compose: type mismatch");
  ThetaMor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.phi.resize(f.dom.m + 1);
  for (int i = 0; i <= f.dom.m; ++i) h.phi[i] = g.phi[f.phi[i]];
  if (f.dom.level > 1) {
    for (int i = 1; i <= f.dom.m; ++i) {
      std::vector<ThetaMor> block;
      for (int j = h.phi[i - 1] + 1; j <= h.phi[i]; ++j) {
        // The unique middle index j' with f.phi(i-1) < j' <= f.phi(i) and
        // g.phi(j'-1) < j <= g.phi(j').
        int jm = -1;
        for (int c = f.phi[i - 1] + 1; c <= f.phi[i]; ++c)
          if (g.phi[c - 1] < j && j <= g.phi[c]) {
            jm = c;
            break;
          }
        if (jm < 0) throw InternalError("theta_compose: no middle index");
        const ThetaMor& fc = f.comps[i - 1][jm - f.phi[i - 1] - 1];
        const ThetaMor& gc = g.comps[jm - 1][j - g.phi[jm - 1] - 1];
        block.push_back(theta_compose(gc, fc));
      }
      h.comps.push_back(std::move(block));
    }
  }
  return h;
}

namespace {

std::vector<std::vector<int>> monotone_maps(int m, int mp) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    out.push_back(v);
    int p = m;
    while (p >= 0 && v[p] == mp) --p;
    if (p < 0) break;
    int nv = v[p] + 1;
    for (int q = p; q <= m; ++q) v[q] = nv;
  }
  return out;
}

}  // namespace

std::vector<ThetaMor> theta_hom(const ThetaObj& a, const ThetaObj& b) {
  if (a.level != b.level) throw InputError("theta_hom: levels differ");
  std::vector<ThetaMor> out;
  for (const auto& phi : monotone_maps(a.m, b.m)) {
    if (a.level == 1) {
      out.push_back(ThetaMor{a, b, phi, {}});
      continue;
    }
    // Option lists per (segment, target-segment) slot.
    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<ThetaMor>> options;
    bool feasible = true;
    for (int i = 1; i <= a.m && feasible; ++i)
      for (int j = phi[i - 1] + 1; j <= phi[i]; ++j) {
        auto opts = theta_hom(a.children[i - 1], b.children[j - 1]);
        if (opts.empty()) {
          feasible = false;
          break;
        }
        slots.push_back({i, j});
        options.push_back(std::move(opts));
      }
    if (!feasible) continue;
    std::vector<size_t> pick(slots.size(), 0);
    while (true) {
      ThetaMor f;
      f.dom = a;
      f.cod = b;
      f.phi = phi;
      f.comps.assign(a.m, {});
      for (size_t s = 0; s < slots.size(); ++s)
        f.comps[slots[s].first - 1].push_back(options[s][pick[s]]);
      out.push_back(std::move(f));
      size_t p = 0;
      while (p < pick.size() && ++pick[p] == options[p].size()) pick[p++] = 0;
      if (p == pick.size()) break;
    }
  }
  return out;
}

std::vector<ThetaObj> theta_enumerate_objects(int level, int size_bound) {
  std::vector<ThetaObj> out;
  if (level == 1) {
    for (int m = 0; m + 1 <= size_bound; ++m)
      out.push_back(ThetaObj{1, m, {}});
    return out;
  }
  // ([m]; o_1..o_m) of size 1 + sum sizes; children chosen recursively with
  // the remaining budget, smallest arity first.
  for (int m = 0; m + 1 <= size_bound; ++m) {
    std::vector<std::vector<ThetaObj>> partial{{}};
    for (int t = 0; t < m; ++t) {
      std::vector<std::vector<ThetaObj>> next;
      for (const auto& pre : partial) {
        int used = 1;
        for (const auto& c : pre) used += theta_size(c);
        int left_slots = m - static_cast<int>(pre.size()) - 1;
        for (const auto& c :
             theta_enumerate_objects(level - 1, size_bound - used - left_slots)) {
          auto ext = pre;
          ext.push_back(c);
          next.push_back(std::move(ext));
        }
      }
      partial = std::move(next);
    }
    for (auto& ch : partial) {
      int sz = 1;
      for (const auto& c : ch) sz += theta_size(c);
      if (sz <= size_bound) out.push_back(ThetaObj{level, m, ch});
    }
  }
  return out;
}

ThetaObj sigma_obj(const ThetaObj& o) { return ThetaObj{o.level + 1, 1, {o}}; }

ThetaMor sigma_mor(const ThetaMor& f) {
  ThetaMor s;
  s.dom = sigma_obj(f.dom);
  s.cod = sigma_obj(f.cod);
  s.phi = {0, 1};
  s.comps = {{f}};
  return s;
}

ThetaObj iota_obj(int level, int m) {
  ThetaObj o;
  o.level = level;
  o.m = m;
  if (level > 1) o.children.assign(m, cell_tree(level - 1, 0));
  return o;
}

ThetaMor iota_mor(int level, const std::vector<int>& phi, int dom_m, int cod_m) {
  ThetaMor f;
  f.dom = iota_obj(level, dom_m);
  f.cod = iota_obj(level, cod_m);
  f.phi = phi;
  if (level > 1)
    for (int i = 1; i <= dom_m; ++i) {
      std::vector<ThetaMor> block(phi[i] - phi[i - 1],
                                  theta_identity(cell_tree(level - 1, 0)));
      f.comps.push_back(std::move(block));
    }
  return f;
}

ThetaObj cell_tree(int level, int k) {
  if (k > level || k < 0) throw InputError("cell_tree: k out of range");
  if (level == 1) return ThetaObj{1, k, {}};
  if (k == 0) return ThetaObj{level, 0, {}};
  return ThetaObj{level, 1, {cell_tree(level - 1, k - 1)}};
}

ThetaObj delta_obj(const std::vector<int>& ks) {
  if (ks.empty()) throw InputError("delta_obj: empty multi-index");
  if (ks.size() == 1) return ThetaObj{1, ks[0], {}};
  std::vector<int> rest(ks.begin(), ks.end() - 1);
  ThetaObj child = delta_obj(rest);
  ThetaObj o;
  o.level = static_cast<int>(ks.size());
  o.m = ks.back();
  o.children.assign(o.m, child);
  return o;
}

ThetaMor delta_mor(const std::vector<int>& dom_ks,
                   const std::vector<int>& cod_ks,
                   const std::vector<std::vector<int>>& coordinate_maps) {
  size_t n = dom_ks.size();
  if (cod_ks.size() != n || coordinate_maps.size() != n)
    throw InputError("delta_mor: arity mismatch");
  ThetaMor f;
  f.dom = delta_obj(dom_ks);
  f.cod = delta_obj(cod_ks);
  f.phi = coordinate_maps.back();
  if (static_cast<int>(f.phi.size()) != dom_ks.back() + 1)
    throw InputError("delta_mor: outer map has wrong length");
  if (n > 1) {
    std::vector<int> drest(dom_ks.begin(), dom_ks.end() - 1);
    std::vector<int> crest(cod_ks.begin(), cod_ks.end() - 1);
    std::vector<std::vector<int>> mrest(coordinate_maps.begin(),
                                        coordinate_maps.end() - 1);
    ThetaMor sub = delta_mor(drest, crest, mrest);
    for (int i = 1; i <= dom_ks.back(); ++i)
      f.comps.push_back(
          std::vector<ThetaMor>(f.phi[i] - f.phi[i - 1], sub));
  }
  return f;
}

namespace {

using Def = RealizedTheta::Def;

RealizedTheta realize_build(const ThetaObj& o) {
  RealizedTheta r;
  r.obj = o;
  if (o.m == 0) {
    r.cat = point(o.level);
    r.vertices = {0};
    Def d;
    d.kind = Def::Kind::Vertex;
    d.vertex = 0;
    r.defs.push_back(d);
    return r;
  }
  auto seg_cat = [&](int i) {
    FiniteStrictNCat child =
        o.level == 1 ? point(0) : realize(o.children[i - 1]).cat;
    return suspension(child);
  };
  FiniteStrictNCat s1 = seg_cat(1);
  r.cat = s1;
  int top = s1.size() - 2, bot = s1.size() - 1;
  r.vertices = {top, bot};
  r.segs = {identity_functor(s1)};
  for (int c = 0; c < s1.size(); ++c) {
    Def d;
    if (c == top) {
      d.kind = Def::Kind::Vertex;
      d.vertex = 0;
    } else if (c == bot) {
      d.kind = Def::Kind::Vertex;
      d.vertex = 1;
    } else {
      d.kind = Def::Kind::Segment;
      d.seg = 1;
      d.seg_cell = c;
    }
    r.defs.push_back(d);
  }
  for (int i = 2; i <= o.m; ++i) {
    FiniteStrictNCat s = seg_cat(i);
    int stop = s.size() - 2, sbot = s.size() - 1;
    SpanDiagram sp;
    sp.apex = point(o.level);
    sp.left = from_point(r.cat, r.vertices.back());
    sp.right = from_point(s, stop);
    PushoutResult p = pushout(sp);
    std::vector<Def> nd(p.result.size());
    for (int c = 0; c < p.result.size(); ++c) {
      const CellDef& d = p.defs[c];
      switch (d.kind) {
        case CellDef::Kind::FromLeft: {
          Def od = r.defs[d.index];
          if (od.kind == Def::Kind::Composite) {
            od.x = p.from_left.assignment[od.x];
            od.y = p.from_left.assignment[od.y];
          }
          nd[c] = od;
          break;
        }
        case CellDef::Kind::FromRight: {
          Def od;
          if (d.index == sbot) {
            od.kind = Def::Kind::Vertex;
            od.vertex = i;
          } else if (d.index == stop) {
            throw InternalError("realize: glued vertex kept a right-hand def");
          } else {
            od.kind = Def::Kind::Segment;
            od.seg = i;
            od.seg_cell = d.index;
          }
          nd[c] = od;
          break;
        }
        case CellDef::Kind::Composite: {
          Def od;
          od.kind = Def::Kind::Composite;
          od.level = d.level;
          od.x = d.x;
          od.y = d.y;
          nd[c] = od;
          break;
        }
      }
    }
    for (auto& seg : r.segs) seg = compose(p.from_left, seg);
    r.segs.push_back(p.from_right);
    for (auto& v : r.vertices) v = p.from_left.assignment[v];
    r.vertices.push_back(p.from_right.assignment[sbot]);
    r.defs = std::move(nd);
    r.cat = p.result;
    // Re-target the stored segment embeddings at the new cat value.
    for (auto& seg : r.segs) seg.target = r.cat;
  }
  return r;
}

}  // namespace

const RealizedTheta& realize(const ThetaObj& o) {
  static std::map<std::string, RealizedTheta> memo;
  std::string key = std::to_string(o.level) + ":" + theta_print(o);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  RealizedTheta r = realize_build(o);
  require_valid(r.cat, "realize(" + key + ")");
  return memo.emplace(key, std::move(r)).first->second;
}

FunctorMap realize_mor(const ThetaMor& f) {
  if (!theta_valid_mor(f)) throw InputError("realize_mor: malformed morphism");
  const RealizedTheta& a = realize(f.dom);
  const RealizedTheta& b = realize(f.cod);
  // Per source segment i and target segment j in its range, the cell map
  // sigma(realize(child_i)) -> b.cat.
  std::vector<std::vector<std::vector<int>>> seg_maps(f.dom.m);
  for (int i = 1; i <= f.dom.m; ++i) {
    for (int j = f.phi[i - 1] + 1; j <= f.phi[i]; ++j) {
      std::vector<int> cm;
      if (f.dom.level == 1) {
        cm = b.segs[j - 1].assignment;
      } else {
        const ThetaMor& c = f.comps[i - 1][j - f.phi[i - 1] - 1];
        FunctorMap rm = suspension(realize_mor(c));
        cm.resize(rm.assignment.size());
        for (size_t t = 0; t < cm.size(); ++t)
          cm[t] = b.segs[j - 1].assignment[rm.assignment[t]];
      }
      seg_maps[i - 1].push_back(std::move(cm));
    }
  }
  std::vector<int> h(a.cat.size(), -1);
  for (int c = 0; c < a.cat.size(); ++c) {
    const Def& d = a.defs[c];
    switch (d.kind) {
      case Def::Kind::Vertex:
        h[c] = b.vertices[f.phi[d.vertex]];
        break;
      case Def::Kind::Segment: {
        int lo = f.phi[d.seg - 1], hi = f.phi[d.seg];
        if (hi == lo) {
          h[c] = b.vertices[hi];
          break;
        }
        int res = -1;
        for (int j = lo + 1; j <= hi; ++j) {
          int u = seg_maps[d.seg - 1][j - lo - 1][d.seg_cell];
          if (j == lo + 1) {
            res = u;
          } else {
            auto z = b.cat.comp(1, u, res);
            if (!z) throw InternalError("realize_mor: missing composite");
            res = *z;
          }
        }
        h[c] = res;
        break;
      }
      case Def::Kind::Composite: {
        auto z = b.cat.comp(d.level, h[d.x], h[d.y]);
        if (!z) throw InternalError("realize_mor: missing composite");
        h[c] = *z;
        break;
      }
    }
  }
  if (!is_functor(a.cat, b.cat, h))
    throw InternalError("realize_mor: realized map is not a functor");
  return FunctorMap{a.cat, b.cat, h};
}

GridRetract grid_retract(const ThetaObj& o) {
  if (o.level == 1)
    return GridRetract{{o.m}, theta_identity(o), theta_identity(o)};
  const int n1 = o.level - 1;
  std::vector<GridRetract> cr;
  for (const auto& c : o.children) cr.push_back(grid_retract(c));
  std::vector<int> k(n1, 0);
  for (const auto& g : cr)
    for (int j = 0; j < n1; ++j) k[j] = std::max(k[j], g.grid[j]);
  std::vector<ThetaMor> s(o.m), rr(o.m);
  for (int t = 0; t < o.m; ++t) {
    std::vector<std::vector<int>> incs, clamps;
    for (int j = 0; j < n1; ++j) {
      std::vector<int> inc(cr[t].grid[j] + 1), clamp(k[j] + 1);
      for (int v = 0; v <= cr[t].grid[j]; ++v) inc[v] = v;
      for (int v = 0; v <= k[j]; ++v) clamp[v] = std::min(v, cr[t].grid[j]);
      incs.push_back(std::move(inc));
      clamps.push_back(std::move(clamp));
    }
    s[t] = theta_compose(delta_mor(cr[t].grid, k, incs), cr[t].section);
    rr[t] = theta_compose(cr[t].retraction, delta_mor(k, cr[t].grid, clamps));
  }
  GridRetract out;
  out.grid = k;
  out.grid.push_back(o.m);
  ThetaObj grid_obj = delta_obj(out.grid);
  std::vector<int> idphi(o.m + 1);
  for (int i = 0; i <= o.m; ++i) idphi[i] = i;
  out.section = ThetaMor{o, grid_obj, idphi, {}};
  out.retraction = ThetaMor{grid_obj, o, idphi, {}};
  for (int i = 1; i <= o.m; ++i) {
    out.section.comps.push_back({s[i - 1]});
    out.retraction.comps.push_back({rr[i - 1]});
  }
  return out;
}

}  // namespace nct
