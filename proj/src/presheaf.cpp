#include "nct/presheaf.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "nct/colimit.hpp"
#include "nct/enumerate.hpp"
#include "nct/standard.hpp"

namespace nct {

namespace {

std::vector<std::vector<int>> monotone_vecs(int m, int mp) {
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

std::string ser_theta_mor(const ThetaMor& f) {
  std::string s = "(";
  for (int v : f.phi) s += std::to_string(v) + ".";
  for (const auto& block : f.comps) {
    s += "[";
    for (const auto& c : block) s += ser_theta_mor(c);
    s += "]";
  }
  return s + ")";
}

std::string ser_index(const IndexMor& g, Indexing ix) {
  if (ix == Indexing::Theta) return ser_theta_mor(g.theta);
  std::string s;
  for (const auto& cm : g.coords) {
    s += "/";
    for (int v : cm) s += std::to_string(v) + ".";
  }
  return s;
}

FunctorMap sigma_pow(FunctorMap f, int i) {
  while (i-- > 0) f = suspension(f);
  return f;
}

FiniteStrictNCat sigma_pow(FiniteStrictNCat x, int i) {
  while (i-- > 0) x = suspension(x);
  return x;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller index wins
  }
};

}  // namespace

TestObject theta_test(const ThetaObj& o) {
  TestObject t;
  t.indexing = Indexing::Theta;
  t.theta = o;
  return t;
}

TestObject delta_test(const std::vector<int>& multi) {
  TestObject t;
  t.indexing = Indexing::Delta;
  t.multi = multi;
  return t;
}

std::string test_print(const TestObject& t) {
  if (t.indexing == Indexing::Theta) return theta_print(t.theta);
  std::string s = "(";
  for (size_t i = 0; i < t.multi.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.multi[i]);
  return s + ")";
}

bool operator==(const TestObject& a, const TestObject& b) {
  return a.indexing == b.indexing && a.theta == b.theta && a.multi == b.multi;
}

const FiniteStrictNCat& realize_test(const TestObject& t) {
  if (t.indexing == Indexing::Theta) return realize(t.theta).cat;
  return realize(delta_obj(t.multi)).cat;
}

IndexMor theta_index_mor(const ThetaMor& f) {
  IndexMor g;
  g.theta = f;
  return g;
}

IndexMor delta_index_mor(const std::vector<std::vector<int>>& coords) {
  IndexMor g;
  g.coords = coords;
  return g;
}

IndexMor compose_index(const TestObject& a, const TestObject& b,
                       const TestObject& c, const IndexMor& g,
                       const IndexMor& f) {
  (void)b;
  (void)c;
  IndexMor h;
  if (a.indexing == Indexing::Theta) {
    h.theta = theta_compose(g.theta, f.theta);
  } else {
    h.coords.resize(f.coords.size());
    for (size_t i = 0; i < f.coords.size(); ++i) {
      h.coords[i].resize(f.coords[i].size());
      for (size_t v = 0; v < f.coords[i].size(); ++v)
        h.coords[i][v] = g.coords[i][f.coords[i][v]];
    }
  }
  return h;
}

const FunctorMap& realize_index_mor(const TestObject& dom,
                                    const TestObject& cod, const IndexMor& g) {
  static std::map<std::string, FunctorMap> memo;
  std::string key =
      test_print(dom) + "|" + test_print(cod) + "|" + ser_index(g, dom.indexing);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  FunctorMap f = dom.indexing == Indexing::Theta
                     ? realize_mor(g.theta)
                     : realize_mor(delta_mor(dom.multi, cod.multi, g.coords));
  return memo.emplace(key, std::move(f)).first->second;
}

std::vector<IndexMor> index_hom(const TestObject& dom, const TestObject& cod) {
  std::vector<IndexMor> out;
  if (dom.indexing == Indexing::Theta) {
    for (const auto& f : theta_hom(dom.theta, cod.theta))
      out.push_back(theta_index_mor(f));
    return out;
  }
  size_t n = dom.multi.size();
  std::vector<std::vector<std::vector<int>>> per(n);
  for (size_t i = 0; i < n; ++i)
    per[i] = monotone_vecs(dom.multi[i], cod.multi[i]);
  std::vector<size_t> pick(n, 0);
  while (true) {
    IndexMor g;
    for (size_t i = 0; i < n; ++i) g.coords.push_back(per[i][pick[i]]);
    out.push_back(std::move(g));
    size_t p = 0;
    while (p < n && ++pick[p] == per[p].size()) pick[p++] = 0;
    if (p == n) break;
  }
  return out;
}

CellularPresheaf nerve(const FiniteStrictNCat& x, Indexing indexing) {
  CellularPresheaf p;
  p.indexing = indexing;
  p.n = x.n;
  p.atoms = {x};
  return p;
}

std::string to_json(const CellularPresheaf& p) {
  nlohmann::ordered_json j;
  j["indexing"] = p.indexing == Indexing::Theta ? "theta" : "delta";
  j["n"] = p.n;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const auto& a : p.atoms)
    j["atoms"].push_back(nlohmann::ordered_json::parse(to_json(a)));
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : p.edges) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (int c = 0; c < e.map.source.size(); ++c)
      m[e.map.source.cells[c]] = e.map.target.cells[e.map.assignment[c]];
    je["map"] = m;
    j["edges"].push_back(je);
  }
  return j.dump(2);
}

const EvalSet& evaluate(const CellularPresheaf& p, const TestObject& o,
                        const Budget& budget) {
  static std::map<std::string, EvalSet> memo;
  std::string key = to_json(p) + "@" + test_print(o);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const FiniteStrictNCat& t = realize_test(o);
  if (t.n != p.n)
    throw InputError("evaluate: test object dimension does not match");
  std::vector<std::pair<int, std::vector<int>>> raw;
  std::map<std::pair<int, std::vector<int>>, int> pos;
  std::vector<std::vector<FunctorMap>> funs(p.atoms.size());
  for (size_t a = 0; a < p.atoms.size(); ++a) {
    funs[a] = fun_enum(t, p.atoms[a], budget);
    for (const auto& f : funs[a]) {
      pos[{static_cast<int>(a), f.assignment}] = static_cast<int>(raw.size());
      raw.push_back({static_cast<int>(a), f.assignment});
    }
  }
  UnionFind uf(static_cast<int>(raw.size()));
  for (const auto& e : p.edges)
    for (const auto& f : funs[e.from]) {
      std::vector<int> g(f.assignment.size());
      for (size_t c = 0; c < g.size(); ++c)
        g[c] = e.map.assignment[f.assignment[c]];
      uf.unite(pos.at({e.from, f.assignment}), pos.at({e.to, g}));
    }
  EvalSet es;
  std::map<int, int> cls_index;
  for (size_t r = 0; r < raw.size(); ++r) {
    int root = uf.find(static_cast<int>(r));
    auto ci = cls_index.find(root);
    if (ci == cls_index.end()) {
      ci = cls_index.emplace(root, static_cast<int>(es.reps.size())).first;
      es.reps.push_back(raw[root]);
    }
    es.cls[raw[r]] = ci->second;
  }
  return memo.emplace(key, std::move(es)).first->second;
}

std::vector<int> restriction(const CellularPresheaf& p, const TestObject& dom,
                             const TestObject& cod, const IndexMor& g,
                             const Budget& budget) {
  const FunctorMap& r = realize_index_mor(dom, cod, g);
  const EvalSet& dcod = evaluate(p, cod, budget);
  const EvalSet& ddom = evaluate(p, dom, budget);
  std::vector<int> out(dcod.size());
  for (int i = 0; i < dcod.size(); ++i) {
    const auto& [a, f] = dcod.reps[i];
    std::vector<int> h(r.assignment.size());
    for (size_t c = 0; c < h.size(); ++c) h[c] = f[r.assignment[c]];
    out[i] = ddom.cls.at({a, h});
  }
  return out;
}

std::vector<std::vector<int>> hom_formal(const FormalDiagram& d,
                                         const CellularPresheaf& p,
                                         const Budget& budget) {
  const size_t nv = d.verts.size();
  std::vector<int> sizes(nv);
  for (size_t v = 0; v < nv; ++v)
    sizes[v] = evaluate(p, d.verts[v], budget).size();
  std::vector<std::vector<int>> tables(d.edges.size());
  for (size_t e = 0; e < d.edges.size(); ++e)
    tables[e] = restriction(p, d.verts[d.edges[e].from],
                            d.verts[d.edges[e].to], d.edges[e].mor, budget);
  std::vector<std::vector<int>> out;
  std::vector<int> pick(nv, 0);
  auto search = [&](auto&& self, size_t v) -> void {
    if (v == nv) {
      out.push_back(pick);
      return;
    }
    for (pick[v] = 0; pick[v] < sizes[v]; ++pick[v]) {
      bool ok = true;
      for (size_t e = 0; e < d.edges.size() && ok; ++e) {
        size_t a = d.edges[e].from, b = d.edges[e].to;
        if (a <= v && b <= v && (a == v || b == v))
          ok = tables[e][pick[b]] == pick[a];
      }
      if (ok) self(self, v + 1);
    }
  };
  search(search, 0);
  return out;
}

EvalSet evaluate_formal(const FormalDiagram& d, const TestObject& o) {
  std::map<std::pair<int, std::string>, int> pos;
  std::vector<std::vector<IndexMor>> homs(d.verts.size());
  std::vector<std::pair<int, IndexMor>> elems;
  for (size_t v = 0; v < d.verts.size(); ++v) {
    homs[v] = index_hom(o, d.verts[v]);
    for (const auto& h : homs[v]) {
      pos[{static_cast<int>(v), ser_index(h, o.indexing)}] =
          static_cast<int>(elems.size());
      elems.push_back({static_cast<int>(v), h});
    }
  }
  UnionFind uf(static_cast<int>(elems.size()));
  for (const auto& e : d.edges)
    for (const auto& h : homs[e.from]) {
      IndexMor c = compose_index(o, d.verts[e.from], d.verts[e.to], e.mor, h);
      uf.unite(pos.at({e.from, ser_index(h, o.indexing)}),
               pos.at({e.to, ser_index(c, o.indexing)}));
    }
  EvalSet es;
  std::map<int, int> cls_index;
  for (size_t r = 0; r < elems.size(); ++r) {
    int root = uf.find(static_cast<int>(r));
    auto ci = cls_index.find(root);
    if (ci == cls_index.end()) {
      ci = cls_index.emplace(root, static_cast<int>(es.reps.size())).first;
      es.reps.push_back({elems[root].first, {root}});
    }
    es.cls[{static_cast<int>(r), {}}] = ci->second;  // keyed by raw position
  }
  return es;
}

std::vector<std::vector<std::vector<int>>> hom_nerve(const CellularPresheaf& u,
                                                     const CellularPresheaf& x,
                                                     const Budget& budget) {
  if (x.atoms.size() != 1)
    throw InputError("hom_nerve: target must be a single-atom nerve");
  const FiniteStrictNCat& xc = x.atoms[0];
  const size_t na = u.atoms.size();
  std::vector<std::vector<FunctorMap>> opts(na);
  for (size_t a = 0; a < na; ++a) opts[a] = fun_enum(u.atoms[a], xc, budget);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<size_t> pick(na, 0);
  auto ok_upto = [&](size_t v) {
    for (const auto& e : u.edges) {
      size_t a = e.from, b = e.to;
      if (a > v || b > v || (a != v && b != v)) continue;
      const auto& hf = opts[a][pick[a]].assignment;
      const auto& ht = opts[b][pick[b]].assignment;
      for (size_t c = 0; c < hf.size(); ++c)
        if (hf[c] != ht[e.map.assignment[c]]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, size_t v) -> void {
    if (v == na) {
      std::vector<std::vector<int>> elem;
      for (size_t a = 0; a < na; ++a) elem.push_back(opts[a][pick[a]].assignment);
      out.push_back(std::move(elem));
      return;
    }
    for (pick[v] = 0; pick[v] < opts[v].size(); ++pick[v])
      if (ok_upto(v)) self(self, v + 1);
  };
  search(search, 0);
  return out;
}

namespace {

std::string count_witness(const char* what, size_t dom, size_t cod) {
  return std::string(what) + ": |Hom(dom)|=" + std::to_string(dom) +
         " |Hom(cod)|=" + std::to_string(cod);
}

}  // namespace

LocalityResult is_local(const CellularPresheaf& x, const Generator& g,
                        const Budget& budget) {
  LocalityResult r;
  if (g.formal) {
    auto da = hom_formal(g.fmap.source, x, budget);
    auto db = hom_formal(g.fmap.target, x, budget);
    r.dom_count = static_cast<int>(da.size());
    r.cod_count = static_cast<int>(db.size());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < da.size(); ++i) index[da[i]] = static_cast<int>(i);
    std::vector<int> hit(da.size(), 0);
    for (const auto& b : db) {
      std::vector<int> image(g.fmap.source.verts.size());
      for (size_t v = 0; v < image.size(); ++v) {
        const auto& table =
            restriction(x, g.fmap.source.verts[v],
                        g.fmap.target.verts[g.fmap.vert_target[v]],
                        g.fmap.vert_mor[v], budget);
        image[v] = table[b[g.fmap.vert_target[v]]];
      }
      auto it = index.find(image);
      if (it == index.end())
        throw InternalError("is_local: image misses the hom-set");
      if (++hit[it->second] > 1) {
        r.witness = count_witness("not injective", da.size(), db.size());
        return r;
      }
    }
    for (size_t i = 0; i < da.size(); ++i)
      if (!hit[i]) {
        r.witness = count_witness("element does not lift", da.size(), db.size());
        return r;
      }
    r.local = true;
    return r;
  }
  auto da = hom_nerve(g.nmap.source, x, budget);
  auto db = hom_nerve(g.nmap.target, x, budget);
  r.dom_count = static_cast<int>(da.size());
  r.cod_count = static_cast<int>(db.size());
  std::map<std::vector<std::vector<int>>, int> index;
  for (size_t i = 0; i < da.size(); ++i) index[da[i]] = static_cast<int>(i);
  std::vector<int> hit(da.size(), 0);
  for (const auto& b : db) {
    std::vector<std::vector<int>> image(g.nmap.source.atoms.size());
    for (size_t a = 0; a < image.size(); ++a) {
      const auto& m = g.nmap.atom_map[a].assignment;
      const auto& ht = b[g.nmap.atom_target[a]];
      image[a].resize(m.size());
      for (size_t c = 0; c < m.size(); ++c) image[a][c] = ht[m[c]];
    }
    auto it = index.find(image);
    if (it == index.end())
      throw InternalError("is_local: image misses the hom-set");
    if (++hit[it->second] > 1) {
      r.witness = count_witness("not injective", da.size(), db.size());
      return r;
    }
  }
  for (size_t i = 0; i < da.size(); ++i)
    if (!hit[i]) {
      r.witness = count_witness("element does not lift", da.size(), db.size());
      return r;
    }
  r.local = true;
  return r;
}

EvalBijection evaluation_bijective(const Generator& g,
                                   const std::vector<TestObject>& window,
                                   const Budget& budget) {
  EvalBijection out;
  for (const auto& t : window) {
    size_t src_count, tgt_count;
    bool injective = true;
    if (g.formal) {
      // Forward map on raw elements (vert, o -> vert), classes via the
      // serialized raw positions stored by evaluate_formal.
      EvalSet s = evaluate_formal(g.fmap.source, t);
      EvalSet tt = evaluate_formal(g.fmap.target, t);
      src_count = s.reps.size();
      tgt_count = tt.reps.size();
      // Rebuild raw element lists to push forward.
      std::vector<std::pair<int, IndexMor>> sraw, traw;
      for (size_t v = 0; v < g.fmap.source.verts.size(); ++v)
        for (const auto& h : index_hom(t, g.fmap.source.verts[v]))
          sraw.push_back({static_cast<int>(v), h});
      std::map<std::pair<int, std::string>, int> tpos;
      {
        int i = 0;
        for (size_t v = 0; v < g.fmap.target.verts.size(); ++v)
          for (const auto& h : index_hom(t, g.fmap.target.verts[v]))
            tpos[{static_cast<int>(v), ser_index(h, t.indexing)}] = i++;
      }
      std::vector<int> image_of_class(src_count, -1);
      std::vector<int> hit(tgt_count, 0);
      for (size_t r = 0; r < sraw.size(); ++r) {
        int sc = s.cls.at({static_cast<int>(r), {}});
        int v = sraw[r].first;
        IndexMor c =
            compose_index(t, g.fmap.source.verts[v],
                          g.fmap.target.verts[g.fmap.vert_target[v]],
                          g.fmap.vert_mor[v], sraw[r].second);
        int traw_pos = tpos.at({g.fmap.vert_target[v],
                                ser_index(c, t.indexing)});
        int tc = tt.cls.at({traw_pos, {}});
        if (image_of_class[sc] < 0) {
          image_of_class[sc] = tc;
          ++hit[tc];
        } else if (image_of_class[sc] != tc) {
          throw InternalError("evaluation_bijective: map not well defined");
        }
      }
      for (int h : hit)
        if (h > 1) injective = false;
      bool surjective = std::count(hit.begin(), hit.end(), 0) == 0;
      if (injective && surjective) continue;
    } else {
      const EvalSet& s = evaluate(g.nmap.source, t, budget);
      const EvalSet& tt = evaluate(g.nmap.target, t, budget);
      src_count = s.reps.size();
      tgt_count = tt.reps.size();
      std::vector<int> hit(tt.reps.size(), 0);
      for (const auto& [a, f] : s.reps) {
        const auto& m = g.nmap.atom_map[a].assignment;
        std::vector<int> h(f.size());
        for (size_t c = 0; c < f.size(); ++c) h[c] = m[f[c]];
        ++hit[tt.cls.at({g.nmap.atom_target[a], h})];
      }
      for (int h : hit)
        if (h > 1) injective = false;
      bool surjective = std::count(hit.begin(), hit.end(), 0) == 0;
      if (injective && surjective) continue;
    }
    out.bijective = false;
    out.witness = "at " + test_print(t) + ": src=" + std::to_string(src_count) +
                  " tgt=" + std::to_string(tgt_count) +
                  (injective ? "" : " (not injective)");
    return out;
  }
  out.bijective = true;
  return out;
}

Generator transport_fiber_product(const Generator& g,
                                  const std::vector<FunctorMap>& rho,
                                  const FunctorMap& h) {
  if (g.formal)
    throw InputError("transport_fiber_product: nerve-kind generator required");
  const auto& src = g.nmap.source;
  const auto& tgt = g.nmap.target;
  if (rho.size() != tgt.atoms.size())
    throw InputError("transport_fiber_product: one rho per target atom");
  // rho on the source atoms by composition through the generator legs.
  std::vector<FunctorMap> rho_src;
  for (size_t a = 0; a < src.atoms.size(); ++a)
    rho_src.push_back(compose(rho[g.nmap.atom_target[a]], g.nmap.atom_map[a]));

  auto build = [&](const CellularPresheaf& p, const std::vector<FunctorMap>& r,
                   std::vector<FunctorMap>& pls, std::vector<FunctorMap>& prs) {
    CellularPresheaf q;
    q.indexing = p.indexing;
    q.n = p.n;
    for (size_t a = 0; a < p.atoms.size(); ++a) {
      FunctorMap pl, pr;
      q.atoms.push_back(fiber_product(h, r[a], &pl, &pr));
      pls.push_back(pl);
      prs.push_back(pr);
    }
    for (const auto& e : p.edges) {
      for (int c = 0; c < r[e.from].source.size(); ++c)
        if (r[e.from].assignment[c] !=
            r[e.to].assignment[e.map.assignment[c]])
          throw InputError("transport_fiber_product: edge not over the cell");
      CellularPresheaf::Edge ne;
      ne.from = e.from;
      ne.to = e.to;
      ne.map = pair_into(q.atoms[e.to], pls[e.to], prs[e.to], pls[e.from],
                         compose(e.map, prs[e.from]));
      q.edges.push_back(ne);
    }
    return q;
  };

  Generator out;
  out.family = g.family;
  out.clause = g.clause + " xC";
  out.formal = false;
  std::vector<FunctorMap> spl, spr, tpl, tpr;
  out.nmap.source = build(src, rho_src, spl, spr);
  out.nmap.target = build(tgt, rho, tpl, tpr);
  out.nmap.atom_target = g.nmap.atom_target;
  for (size_t a = 0; a < src.atoms.size(); ++a) {
    int b = g.nmap.atom_target[a];
    out.nmap.atom_map.push_back(
        pair_into(out.nmap.target.atoms[b], tpl[b], tpr[b], spl[a],
                  compose(g.nmap.atom_map[a], spr[a])));
  }
  return out;
}

namespace {

// --- generator construction -------------------------------------------------

std::vector<int> identity_coord(int v) {
  std::vector<int> c(v + 1);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

IndexMor delta_mor_at(const std::vector<int>& dom_multi, int coord,
                      std::vector<int> map_at_coord) {
  // Identity on every coordinate except `coord` (1-based).
  std::vector<std::vector<int>> coords;
  for (size_t i = 0; i < dom_multi.size(); ++i)
    coords.push_back(static_cast<int>(i) == coord - 1
                         ? map_at_coord
                         : identity_coord(dom_multi[i]));
  return delta_index_mor(coords);
}

std::vector<std::vector<int>> multis_bounded(int n, int bound,
                                             int size_bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(n, 0);
  while (true) {
    if (theta_size(delta_obj(m)) <= size_bound) out.push_back(m);
    int p = 0;
    while (p < n && m[p] == bound) m[p++] = 0;
    if (p == n) break;
    ++m[p];
  }
  return out;
}

void add_segal_delta(GeneratorSet& gs, int n, int bound) {
  for (int c = 1; c <= n; ++c)
    for (const auto& rest : multis_bounded(n, bound, bound)) {
      for (int m = 2; m <= bound; ++m) {
        std::vector<int> cod = rest;
        cod[c - 1] = m;
        if (theta_size(delta_obj(cod)) > bound) continue;
        for (int k = 1; k <= m - 1; ++k) {
          if (rest[c - 1] != 0) continue;  // vary only coordinate c
          Generator g;
          g.family = "Segal_Delta";
          g.clause = "coord=" + std::to_string(c) + " spine k=" +
                     std::to_string(k) + " of m=" + std::to_string(m) +
                     " at " + test_print(delta_test(rest));
          g.formal = true;
          auto with = [&](int v) {
            std::vector<int> mm = rest;
            mm[c - 1] = v;
            return delta_test(mm);
          };
          FormalDiagram dom;
          dom.indexing = Indexing::Delta;
          dom.n = n;
          dom.verts = {with(k), with(m - k), with(0)};
          dom.edges.push_back({2, 0, delta_mor_at(dom.verts[2].multi, c, {k})});
          dom.edges.push_back({2, 1, delta_mor_at(dom.verts[2].multi, c, {0})});
          FormalDiagram cod_d;
          cod_d.indexing = Indexing::Delta;
          cod_d.n = n;
          cod_d.verts = {with(m)};
          g.fmap.source = dom;
          g.fmap.target = cod_d;
          g.fmap.vert_target = {0, 0, 0};
          std::vector<int> inc_lo(k + 1), inc_hi(m - k + 1);
          std::iota(inc_lo.begin(), inc_lo.end(), 0);
          std::iota(inc_hi.begin(), inc_hi.end(), k);
          g.fmap.vert_mor = {delta_mor_at(dom.verts[0].multi, c, inc_lo),
                             delta_mor_at(dom.verts[1].multi, c, inc_hi),
                             delta_mor_at(dom.verts[2].multi, c, {k})};
          gs.gens.push_back(std::move(g));
        }
      }
    }
}

void add_glob_delta(GeneratorSet& gs, int n, int bound) {
  for (const auto& m : multis_bounded(n, bound, bound)) {
    std::vector<int> hat(n);
    for (int j = 0; j < n; ++j) {
      bool outer_zero = false;
      for (int i = j; i < n; ++i)
        if (m[i] == 0) outer_zero = true;
      hat[j] = outer_zero ? 0 : m[j];
    }
    if (hat == m) continue;
    Generator g;
    g.family = "Glob_Delta";
    g.clause = test_print(delta_test(m)) + " -> " + test_print(delta_test(hat));
    g.formal = true;
    g.fmap.source.indexing = g.fmap.target.indexing = Indexing::Delta;
    g.fmap.source.n = g.fmap.target.n = n;
    g.fmap.source.verts = {delta_test(m)};
    g.fmap.target.verts = {delta_test(hat)};
    g.fmap.vert_target = {0};
    std::vector<std::vector<int>> coords;
    for (int j = 0; j < n; ++j)
      coords.push_back(hat[j] == 0 ? std::vector<int>(m[j] + 1, 0)
                                   : identity_coord(m[j]));
    g.fmap.vert_mor = {delta_index_mor(coords)};
    gs.gens.push_back(std::move(g));
  }
}

void add_comp_delta(GeneratorSet& gs, int n, int bound) {
  for (int c = 1; c <= n; ++c)
    for (const auto& outer : multis_bounded(n, bound, bound)) {
      bool ok = true;
      for (int i = 0; i < c; ++i)
        if (outer[i] != 0) ok = false;  // inner coordinates forced to 0
      if (!ok) continue;
      std::vector<int> base = outer;
      auto with = [&](int v) {
        std::vector<int> mm = base;
        mm[c - 1] = v;
        return delta_test(mm);
      };
      Generator g;
      g.family = "Comp_Delta";
      g.clause =
          "coord=" + std::to_string(c) + " at " + test_print(delta_test(base));
      g.formal = true;
      FormalDiagram dom;
      dom.indexing = Indexing::Delta;
      dom.n = n;
      dom.verts = {with(3), with(1), with(1), with(0), with(0)};
      dom.edges.push_back({1, 0, delta_mor_at(dom.verts[1].multi, c, {0, 2})});
      dom.edges.push_back({1, 3, delta_mor_at(dom.verts[1].multi, c, {0, 0})});
      dom.edges.push_back({2, 0, delta_mor_at(dom.verts[2].multi, c, {1, 3})});
      dom.edges.push_back({2, 4, delta_mor_at(dom.verts[2].multi, c, {0, 0})});
      FormalDiagram cod_d;
      cod_d.indexing = Indexing::Delta;
      cod_d.n = n;
      cod_d.verts = {with(0)};
      g.fmap.source = dom;
      g.fmap.target = cod_d;
      g.fmap.vert_target = {0, 0, 0, 0, 0};
      g.fmap.vert_mor = {delta_mor_at(dom.verts[0].multi, c, {0, 0, 0, 0}),
                         delta_mor_at(dom.verts[1].multi, c, {0, 0}),
                         delta_mor_at(dom.verts[2].multi, c, {0, 0}),
                         delta_mor_at(dom.verts[3].multi, c, {0}),
                         delta_mor_at(dom.verts[4].multi, c, {0})};
      gs.gens.push_back(std::move(g));
    }
}

FormalMap sigma_shriek(const FormalMap& f) {
  FormalMap s = f;
  auto lift_diag = [](FormalDiagram d) {
    for (auto& v : d.verts) v.theta = sigma_obj(v.theta);
    for (auto& e : d.edges) e.mor.theta = sigma_mor(e.mor.theta);
    d.n += 1;
    return d;
  };
  s.source = lift_diag(f.source);
  s.target = lift_diag(f.target);
  for (auto& m : s.vert_mor) m.theta = sigma_mor(m.theta);
  return s;
}

void add_segal_theta(GeneratorSet& gs, int n, int bound) {
  if (n > 1) {
    GeneratorSet sub;
    add_segal_theta(sub, n - 1, bound);
    for (auto& g : sub.gens) {
      g.clause = "sigma(" + g.clause + ")";
      g.fmap = sigma_shriek(g.fmap);
      gs.gens.push_back(std::move(g));
    }
  }
  int klo = n == 1 ? 1 : 0;  // level 1 keeps only the proper spine squares
  for (const auto& o : theta_enumerate_objects(n, bound)) {
    int m = o.m;
    if (m < (n == 1 ? 2 : 1)) continue;
    for (int k = klo; k <= (n == 1 ? m - 1 : m); ++k) {
      ThetaObj a{n, k, {}}, b{n, m - k, {}}, pt{n, 0, {}};
      if (n > 1) {
        a.children.assign(o.children.begin(), o.children.begin() + k);
        b.children.assign(o.children.begin() + k, o.children.end());
      }
      Generator g;
      g.family = "Segal_Theta";
      g.clause = "spine k=" + std::to_string(k) + " of " + theta_print(o);
      g.formal = true;
      FormalDiagram dom;
      dom.indexing = Indexing::Theta;
      dom.n = n;
      dom.verts = {theta_test(a), theta_test(b), theta_test(pt)};
      ThetaMor pa{pt, a, {k}, {}};
      ThetaMor pb{pt, b, {0}, {}};
      dom.edges.push_back({2, 0, theta_index_mor(pa)});
      dom.edges.push_back({2, 1, theta_index_mor(pb)});
      FormalDiagram cod_d;
      cod_d.indexing = Indexing::Theta;
      cod_d.n = n;
      cod_d.verts = {theta_test(o)};
      ThetaMor la{a, o, {}, {}};
      for (int i = 0; i <= k; ++i) la.phi.push_back(i);
      ThetaMor lb{b, o, {}, {}};
      for (int i = k; i <= m; ++i) lb.phi.push_back(i);
      if (n > 1) {
        for (int i = 1; i <= k; ++i)
          la.comps.push_back({theta_identity(o.children[i - 1])});
        for (int i = 1; i <= m - k; ++i)
          lb.comps.push_back({theta_identity(o.children[k + i - 1])});
      }
      ThetaMor lp{pt, o, {k}, {}};
      g.fmap.source = dom;
      g.fmap.target = cod_d;
      g.fmap.vert_target = {0, 0, 0};
      g.fmap.vert_mor = {theta_index_mor(la), theta_index_mor(lb),
                         theta_index_mor(lp)};
      gs.gens.push_back(std::move(g));
    }
  }
}

void add_comp_theta(GeneratorSet& gs, int n) {
  if (n > 1) {
    GeneratorSet sub;
    add_comp_theta(sub, n - 1);
    for (auto& g : sub.gens) {
      g.clause = "sigma(" + g.clause + ")";
      g.fmap = sigma_shriek(g.fmap);
      gs.gens.push_back(std::move(g));
    }
  }
  Generator g;
  g.family = "Comp_Theta";
  g.clause = "iota(K) level " + std::to_string(n);
  g.formal = true;
  FormalDiagram dom;
  dom.indexing = Indexing::Theta;
  dom.n = n;
  for (int m : {3, 1, 1, 0, 0}) dom.verts.push_back(theta_test(iota_obj(n, m)));
  dom.edges.push_back({1, 0, theta_index_mor(iota_mor(n, {0, 2}, 1, 3))});
  dom.edges.push_back({1, 3, theta_index_mor(iota_mor(n, {0, 0}, 1, 0))});
  dom.edges.push_back({2, 0, theta_index_mor(iota_mor(n, {1, 3}, 1, 3))});
  dom.edges.push_back({2, 4, theta_index_mor(iota_mor(n, {0, 0}, 1, 0))});
  FormalDiagram cod_d;
  cod_d.indexing = Indexing::Theta;
  cod_d.n = n;
  cod_d.verts = {theta_test(iota_obj(n, 0))};
  g.fmap.source = dom;
  g.fmap.target = cod_d;
  g.fmap.vert_target = {0, 0, 0, 0, 0};
  g.fmap.vert_mor = {theta_index_mor(iota_mor(n, {0, 0, 0, 0}, 3, 0)),
                     theta_index_mor(iota_mor(n, {0, 0}, 1, 0)),
                     theta_index_mor(iota_mor(n, {0, 0}, 1, 0)),
                     theta_index_mor(iota_mor(n, {0}, 0, 0)),
                     theta_index_mor(iota_mor(n, {0}, 0, 0))};
  gs.gens.push_back(std::move(g));
}

// The map sigma(C_{j-1} x C_{k-1}) -> W sending the suspended pair (a, b) to
// the 1-composite of the two whiskers in the endpoint wedge W of C_j and C_k.
FunctorMap glue_into_wedge(const FiniteStrictNCat& m, const FunctorMap& p1,
                           const FunctorMap& p2, const PushoutResult& w,
                           bool swap_factors) {
  const FunctorMap& first = w.from_left;
  const FunctorMap& second = w.from_right;
  int base = m.size() - 2;  // top/bottom are the last two suspension cells
  std::vector<int> h(m.size());
  for (int c = 0; c < base; ++c) {
    int a = p1.assignment[c], b = p2.assignment[c];
    auto z = swap_factors
                 ? w.result.comp(1, second.assignment[a], first.assignment[b])
                 : w.result.comp(1, second.assignment[b], first.assignment[a]);
    if (!z) throw InternalError("glue_into_wedge: missing composite");
    h[c] = *z;
  }
  h[base] = initial_object(w.result);
  h[base + 1] = final_object(w.result);
  if (!is_functor(m, w.result, h))
    throw InternalError("glue_into_wedge: not a functor");
  return FunctorMap{m, w.result, h};
}

FiniteStrictNCat trunc0(const FiniteStrictNCat& x) {
  FiniteStrictNCat r;
  r.n = 0;
  for (int c : x.cells_of_dim_le(0)) r.cells.push_back(x.cells[c]);
  return r;
}

FunctorMap obj_part(const FunctorMap& f, const FiniteStrictNCat& s0,
                    const FiniteStrictNCat& t0) {
  std::vector<int> asg;
  for (const auto& name : s0.cells)
    asg.push_back(t0.index_of(
        f.target.cells[f.assignment[f.source.index_of(name)]]));
  return FunctorMap{s0, t0, asg};
}

void add_s00(GeneratorSet& gs, int n) {
  auto pro_cat = [&](FiniteStrictNCat x) { return promote(x, n); };
  auto pro_map = [&](FunctorMap f) { return promote(f, n); };

  {  // empty clause of family (a)
    Generator g;
    g.family = "S00";
    g.clause = "(a) empty";
    g.formal = false;
    g.nmap.source.indexing = g.nmap.target.indexing = Indexing::Theta;
    g.nmap.source.n = g.nmap.target.n = n;
    g.nmap.target.atoms = {empty_ncat(n)};
    gs.gens.push_back(std::move(g));
  }
  for (int i = 0; i <= n - 1; ++i) {  // (a): C_i u^{dC_i} C_i -> dC_{i+1}
    FiniteStrictNCat c = cell(i), b = boundary(i);
    std::vector<int> inc(b.size());
    for (int x = 0; x < b.size(); ++x) inc[x] = c.index_of(b.cells[x]);
    FunctorMap bi{b, c, inc};
    PushoutResult p = pushout(SpanDiagram{b, bi, bi});
    Generator g;
    g.family = "S00";
    g.clause = "(a) i=" + std::to_string(i);
    g.formal = false;
    g.nmap.source.indexing = g.nmap.target.indexing = Indexing::Theta;
    g.nmap.source.n = g.nmap.target.n = n;
    g.nmap.source.atoms = {pro_cat(c), pro_cat(c), pro_cat(b)};
    g.nmap.source.edges.push_back({2, 0, pro_map(bi)});
    g.nmap.source.edges.push_back({2, 1, pro_map(bi)});
    g.nmap.target.atoms = {pro_cat(p.result)};
    g.nmap.atom_target = {0, 0, 0};
    g.nmap.atom_map = {pro_map(p.from_left), pro_map(p.from_right),
                       pro_map(compose(p.from_left, bi))};
    gs.gens.push_back(std::move(g));
  }
  for (int i = 0; i <= n; ++i)  // (b): C_j u^{C_i} C_j -> wedge closure
    for (int j = i + 1; j <= n; ++j) {
      FiniteStrictNCat c = cell(j - i);
      PushoutResult w = wedge_at_endpoints(c, c);
      FunctorMap fin = from_point(c, final_object(c));
      FunctorMap ini = from_point(c, initial_object(c));
      Generator g;
      g.family = "S00";
      g.clause = "(b) i=" + std::to_string(i) + " j=" + std::to_string(j);
      g.formal = false;
      g.nmap.source.indexing = g.nmap.target.indexing = Indexing::Theta;
      g.nmap.source.n = g.nmap.target.n = n;
      g.nmap.source.atoms = {pro_cat(sigma_pow(c, i)), pro_cat(sigma_pow(c, i)),
                             pro_cat(sigma_pow(point(c.n), i))};
      g.nmap.source.edges.push_back({2, 0, pro_map(sigma_pow(fin, i))});
      g.nmap.source.edges.push_back({2, 1, pro_map(sigma_pow(ini, i))});
      g.nmap.target.atoms = {pro_cat(sigma_pow(w.result, i))};
      g.nmap.atom_target = {0, 0, 0};
      g.nmap.atom_map = {pro_map(sigma_pow(w.from_left, i)),
                         pro_map(sigma_pow(w.from_right, i)),
                         pro_map(sigma_pow(compose(w.from_left, fin), i))};
      gs.gens.push_back(std::move(g));
    }
  for (int i = 0; i <= n - 1; ++i)  // (c): wedge decomposition of products
    for (int j = 1; j <= n - i; ++j)
      for (int k = 1; k <= n - i; ++k) {
        int a = std::max(j, k);
        FiniteStrictNCat xj = promote(cell(j), a), yk = promote(cell(k), a);
        FunctorMap pj, pk;
        FiniteStrictNCat q =
            fiber_product(to_point(xj), to_point(yk), &pj, &pk);
        PushoutResult w1 = wedge_at_endpoints(xj, yk);
        PushoutResult w2 = wedge_at_endpoints(yk, xj);
        auto cmap = [&](const FiniteStrictNCat& from,
                        const FiniteStrictNCat& to, int obj) {
          return compose(from_point(to, obj), to_point(from));
        };
        FunctorMap f1 = pair_into(q, pj, pk, identity_functor(xj),
                                  cmap(xj, yk, initial_object(yk)));
        FunctorMap f2 = pair_into(q, pj, pk, cmap(yk, xj, final_object(xj)),
                                  identity_functor(yk));
        auto q1 = induced_map(w1, f1, f2);
        FunctorMap f2b = pair_into(q, pj, pk, cmap(yk, xj, initial_object(xj)),
                                   identity_functor(yk));
        FunctorMap f1b = pair_into(q, pj, pk, identity_functor(xj),
                                   cmap(xj, yk, final_object(yk)));
        auto q2 = induced_map(w2, f2b, f1b);
        if (!q1 || !q2)
          throw InternalError("S00(c): wedge comparison does not extend");
        // apex sigma(C_{j-1} x C_{k-1})
        int a2 = std::max(j - 1, k - 1);
        FiniteStrictNCat xj1 = promote(cell(j - 1), a2),
                         yk1 = promote(cell(k - 1), a2);
        FunctorMap p1, p2;
        FiniteStrictNCat pm =
            fiber_product(to_point(xj1), to_point(yk1), &p1, &p2);
        FiniteStrictNCat m = suspension(pm);
        FunctorMap sp1 = suspension(p1), sp2 = suspension(p2);
        // the suspended projections land in C_j, C_k; only the base cells
        // are used below, and suspension keeps their indices.
        FunctorMap e1 = glue_into_wedge(m, sp1, sp2, w1, false);
        FunctorMap e2 = glue_into_wedge(m, sp1, sp2, w2, true);
        Generator g;
        g.family = "S00";
        g.clause = "(c) i=" + std::to_string(i) + " j=" + std::to_string(j) +
                   " k=" + std::to_string(k);
        g.formal = false;
        g.nmap.source.indexing = g.nmap.target.indexing = Indexing::Theta;
        g.nmap.source.n = g.nmap.target.n = n;
        g.nmap.source.atoms = {pro_cat(sigma_pow(w1.result, i)),
                               pro_cat(sigma_pow(w2.result, i)),
                               pro_cat(sigma_pow(m, i))};
        g.nmap.source.edges.push_back({2, 0, pro_map(sigma_pow(e1, i))});
        g.nmap.source.edges.push_back({2, 1, pro_map(sigma_pow(e2, i))});
        g.nmap.target.atoms = {pro_cat(sigma_pow(q, i))};
        g.nmap.atom_target = {0, 0, 0};
        g.nmap.atom_map = {pro_map(sigma_pow(*q1, i)),
                           pro_map(sigma_pow(*q2, i)),
                           pro_map(sigma_pow(compose(*q1, e1), i))};
        gs.gens.push_back(std::move(g));
      }
  for (int k = 0; k <= n; ++k) {  // (d): contracted 3-simplex -> C_k
    SpanDiagram ks = k_span();
    FiniteStrictNCat a3 = ks.left.target, b2 = ks.right.target, ap = ks.apex;
    FunctorMap le = ks.left, ri = ks.right;
    if (k == n) {
      // sigma^n of a 1-category would exceed the ambient dimension; a
      // functor from an n-category only sees the 0-truncated bases.
      FiniteStrictNCat a0 = trunc0(a3), b0 = trunc0(b2), p0 = trunc0(ap);
      le = obj_part(ks.left, p0, a0);
      ri = obj_part(ks.right, p0, b0);
      a3 = a0;
      b2 = b0;
      ap = p0;
    }
    Generator g;
    g.family = "S00";
    g.clause = "(d) k=" + std::to_string(k);
    g.formal = false;
    g.nmap.source.indexing = g.nmap.target.indexing = Indexing::Theta;
    g.nmap.source.n = g.nmap.target.n = n;
    g.nmap.source.atoms = {pro_cat(sigma_pow(a3, k)), pro_cat(sigma_pow(b2, k)),
                           pro_cat(sigma_pow(ap, k))};
    g.nmap.source.edges.push_back({2, 0, pro_map(sigma_pow(le, k))});
    g.nmap.source.edges.push_back({2, 1, pro_map(sigma_pow(ri, k))});
    g.nmap.target.atoms = {pro_cat(sigma_pow(point(a3.n), k))};
    g.nmap.atom_target = {0, 0, 0};
    g.nmap.atom_map = {pro_map(sigma_pow(to_point(a3), k)),
                       pro_map(sigma_pow(to_point(b2), k)),
                       pro_map(sigma_pow(to_point(ap), k))};
    gs.gens.push_back(std::move(g));
  }
}

void add_s0_window(GeneratorSet& gs, int n) {
  add_s00(gs, n);
  size_t base = gs.gens.size();
  FiniteStrictNCat h_cat = promote(cell(1), n);
  FunctorMap h0 = to_point(h_cat);  // C_1 -> C_0
  for (size_t i = 0; i < base; ++i) {
    const Generator& g = gs.gens[i];
    if (g.formal || g.nmap.source.atoms.empty()) continue;
    bool bd = g.clause.rfind("(b)", 0) == 0 || g.clause.rfind("(d)", 0) == 0;
    if (!bd) continue;
    std::vector<FunctorMap> rho;
    for (const auto& t : g.nmap.target.atoms) rho.push_back(to_point(t));
    Generator tg = transport_fiber_product(g, rho, h0);
    tg.family = "S0_window";
    gs.gens.push_back(std::move(tg));
  }
  // One genuine transport over C_1: the (b) i=1 generators carry a canonical
  // map to C_1 by collapsing the suspension fibers.
  for (size_t i = 0; i < base; ++i) {
    const Generator& g = gs.gens[i];
    if (g.formal || g.clause.rfind("(b) i=1", 0) != 0) continue;
    FiniteStrictNCat c1 = promote(cell(1), n);
    std::vector<FunctorMap> rho;
    for (const auto& t : g.nmap.target.atoms) {
      // t is a promoted suspension: two 0-cells, everything else a fiber
      // cell.  Collapse the fiber onto the arrow of C_1.
      int ini = initial_object(t);
      std::vector<int> asg(t.size());
      for (int c = 0; c < t.size(); ++c)
        asg[c] = t.dim(c) == 0 ? c1.index_of(c == ini ? "T1" : "B1")
                               : c1.index_of("pt");
      if (!is_functor(t, c1, asg))
        throw InternalError("S0_window: collapse to C_1 is not a functor");
      rho.push_back(FunctorMap{t, c1, asg});
    }
    Generator tg = transport_fiber_product(g, rho, identity_functor(c1));
    tg.family = "S0_window";
    tg.clause += " (identity base)";
    gs.gens.push_back(std::move(tg));
  }
}

}  // namespace

GeneratorSet build_generators(const std::string& label, int n, int bound) {
  GeneratorSet gs;
  gs.label = label;
  if (label == "Segal_Delta") {
    add_segal_delta(gs, n, bound);
  } else if (label == "Glob_Delta") {
    add_glob_delta(gs, n, bound);
  } else if (label == "Comp_Delta") {
    add_comp_delta(gs, n, bound);
  } else if (label == "Segal_Theta") {
    add_segal_theta(gs, n, bound);
  } else if (label == "Comp_Theta") {
    add_comp_theta(gs, n);
  } else if (label == "S00") {
    add_s00(gs, n);
  } else if (label == "S0_window") {
    add_s0_window(gs, n);
  } else {
    throw InputError("build_generators: unknown label " + label);
  }
  return gs;
}

std::vector<TestObject> default_window(Indexing indexing, int n,
                                       int size_bound) {
  std::vector<TestObject> out;
  if (indexing == Indexing::Theta) {
    for (const auto& o : theta_enumerate_objects(n, size_bound))
      out.push_back(theta_test(o));
  } else {
    for (const auto& m : multis_bounded(n, size_bound, size_bound))
      out.push_back(delta_test(m));
  }
  return out;
}

namespace {

TestObject grid_test(Indexing indexing, const std::vector<int>& multi) {
  return indexing == Indexing::Theta ? theta_test(delta_obj(multi))
                                     : delta_test(multi);
}

IndexMor grid_mor(Indexing indexing, const std::vector<int>& dom_multi,
                  const std::vector<int>& cod_multi,
                  const std::vector<std::vector<int>>& coords) {
  if (indexing == Indexing::Delta) return delta_index_mor(coords);
  return theta_index_mor(delta_mor(dom_multi, cod_multi, coords));
}

}  // namespace

RecognitionResult recognize_gaunt_nerve(const CellularPresheaf& x,
                                        const std::vector<TestObject>& window,
                                        int gen_bound, const Budget& budget) {
  RecognitionResult res;
  const int n = x.n;
  std::vector<std::string> labels =
      x.indexing == Indexing::Delta
          ? std::vector<std::string>{"Segal_Delta", "Glob_Delta", "Comp_Delta"}
          : std::vector<std::string>{"Segal_Theta", "Comp_Theta"};
  for (const auto& label : labels) {
    GeneratorSet gs = build_generators(label, n, gen_bound);
    for (const auto& g : gs.gens) {
      LocalityResult lr = is_local(x, g, budget);
      if (!lr.local) {
        res.witness = g.family + " " + g.clause + ": " + lr.witness;
        return res;
      }
    }
  }
  // Reconstruction from the top cell evaluation.
  std::vector<int> ones(n, 1);
  TestObject top = grid_test(x.indexing, ones);
  const EvalSet& cells = evaluate(x, top, budget);
  const int nc = cells.size();
  FiniteStrictNCat r;
  r.n = n;
  for (int c = 0; c < nc; ++c) r.cells.push_back("x" + std::to_string(c));
  r.structures.resize(n);
  for (int i = 1; i <= n; ++i) {
    // source / target: collapse the coordinates of level > i.
    std::vector<std::vector<int>> scoords, tcoords;
    for (int p2 = 1; p2 <= n; ++p2) {
      bool deep = p2 <= n - i + 1;  // position p2 carries level n-p2+1 >= i
      scoords.push_back(deep ? std::vector<int>{0, 0} : identity_coord(1));
      tcoords.push_back(deep ? std::vector<int>{1, 1} : identity_coord(1));
    }
    auto sm = restriction(x, top, top, grid_mor(x.indexing, ones, ones, scoords),
                          budget);
    auto tm = restriction(x, top, top, grid_mor(x.indexing, ones, ones, tcoords),
                          budget);
    r.structures[i - 1].src = sm;
    r.structures[i - 1].tgt = tm;
    // composition via the unique lift through the glue object.
    std::vector<int> glue = ones;
    glue[n - i] = 2;
    TestObject gt = grid_test(x.indexing, glue);
    auto seg = [&](std::vector<int> two) {
      std::vector<std::vector<int>> cs;
      for (int p2 = 1; p2 <= n; ++p2)
        cs.push_back(p2 == n - i + 1 ? two : identity_coord(1));
      return restriction(x, top, gt, grid_mor(x.indexing, ones, glue, cs),
                         budget);
    };
    auto ru1 = seg({0, 1});
    auto ru2 = seg({1, 2});
    auto rw = seg({0, 2});
    for (int xx = 0; xx < nc; ++xx)
      for (int yy = 0; yy < nc; ++yy) {
        if (sm[xx] != tm[yy]) continue;
        int found = -1;
        for (size_t e = 0; e < ru1.size(); ++e)
          if (ru1[e] == yy && ru2[e] == xx) {
            if (found >= 0) {
              res.witness = "composition lift not unique at level " +
                            std::to_string(i);
              return res;
            }
            found = static_cast<int>(e);
          }
        if (found < 0) {
          res.witness =
              "composition lift missing at level " + std::to_string(i);
          return res;
        }
        r.structures[i - 1].comp[{xx, yy}] = rw[found];
      }
  }
  ValidationReport vr = validate(r);
  if (!vr.ok) {
    res.witness = "reconstruction fails validation: " +
                  (vr.violations.empty() ? std::string("unknown")
                                         : vr.violations.front().axiom);
    return res;
  }
  for (const auto& t : window) {
    int lhs = evaluate(x, t, budget).size();
    int rhs = static_cast<int>(fun_enum(realize_test(t), r, budget).size());
    if (lhs != rhs) {
      res.witness = "window mismatch at " + test_print(t) + ": presheaf " +
                    std::to_string(lhs) + " vs nerve " + std::to_string(rhs);
      return res;
    }
  }
  res.accepted = true;
  res.reconstruction = std::move(r);
  return res;
}

}  // namespace nct
