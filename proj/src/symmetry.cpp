#include "nct/symmetry.hpp"

#include <algorithm>
#include <map>

#include "nct/enumerate.hpp"
#include "nct/standard.hpp"
#include "nct/theta.hpp"

namespace nct {

namespace {

bool same_cat(const FiniteStrictNCat& a, const FiniteStrictNCat& b) {
  if (a.n != b.n || a.cells != b.cells) return false;
  for (int i = 0; i < a.n; ++i) {
    if (a.structures[i].src != b.structures[i].src) return false;
    if (a.structures[i].tgt != b.structures[i].tgt) return false;
    if (a.structures[i].comp != b.structures[i].comp) return false;
  }
  return true;
}

// The canonical cell involution C_k -> C_k realizing r_I.  Cell indices:
// pt = 0, T_l = 2l-1, B_l = 2l; the pair (T_l, B_l) is the src/tgt value
// pair of structure level k - l + 1, so flipping level i swaps the pair at
// l = k - i + 1.
std::vector<int> rho_cells(int k, const std::vector<bool>& flips) {
  std::vector<int> rho(2 * k + 1);
  rho[0] = 0;
  for (int l = 1; l <= k; ++l) {
    bool f = k - l < static_cast<int>(flips.size()) && flips[k - l];
    rho[2 * l - 1] = f ? 2 * l : 2 * l - 1;
    rho[2 * l] = f ? 2 * l - 1 : 2 * l;
  }
  return rho;
}

std::vector<bool> xor_flips(const std::vector<bool>& a,
                            const std::vector<bool>& b) {
  std::vector<bool> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] != b[i];
  return r;
}

}  // namespace

GlobularWindow globular_window(int n, const Budget& budget) {
  GlobularWindow w;
  w.n = n;
  for (int k = 0; k <= n; ++k) w.objects.push_back(promote(cell(k), n));
  w.hom.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    w.hom[i].resize(n + 1);
    for (int j = 0; j <= n; ++j)
      w.hom[i][j] = fun_enum(w.objects[i], w.objects[j], budget);
  }
  return w;
}

std::vector<AutoEquivalence> autos_of_globular(int n, const Budget& budget) {
  GlobularWindow w = globular_window(n, budget);
  // Index lookup per ordered pair of objects.
  std::vector<std::vector<std::map<std::vector<int>, int>>> idx(n + 1);
  std::vector<std::vector<int>> id_at(n + 1, std::vector<int>(1));
  for (int i = 0; i <= n; ++i) {
    idx[i].resize(n + 1);
    for (int j = 0; j <= n; ++j)
      for (size_t t = 0; t < w.hom[i][j].size(); ++t)
        idx[i][j][w.hom[i][j][t].assignment] = static_cast<int>(t);
    id_at[i][0] = idx[i][i].at(identity_functor(w.objects[i]).assignment);
  }
  auto compose_idx = [&](int i, int j, int k, int te, int tg) {
    const auto& e = w.hom[i][j][te].assignment;
    const auto& g = w.hom[j][k][tg].assignment;
    std::vector<int> c(e.size());
    for (size_t a = 0; a < e.size(); ++a) c[a] = g[e[a]];
    return idx[i][k].at(c);
  };

  // Invertibility forces the object map to be the identity: hom-set sizes
  // |Fun(C_i, C_j)| = 2 min(i,j) + 1 pin min(obj(i), obj(i)) = i.

  // Slots in lexicographic order; factorization triples for pruning.
  struct Slot {
    int i, j, t;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<std::vector<int>>> slot_of(n + 1);
  for (int i = 0; i <= n; ++i) {
    slot_of[i].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      slot_of[i][j].resize(w.hom[i][j].size());
      for (size_t t = 0; t < w.hom[i][j].size(); ++t) {
        slot_of[i][j][t] = static_cast<int>(slots.size());
        slots.push_back({i, j, static_cast<int>(t)});
      }
    }
  }
  struct Triple {
    int se, sg, sh;  // slots of e: i->j, g: j->k, h = g.e: i->k
    int i, j, k;
  };
  std::vector<Triple> triples;
  std::vector<std::vector<int>> triples_at(slots.size());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (size_t te = 0; te < w.hom[i][j].size(); ++te)
          for (size_t tg = 0; tg < w.hom[j][k].size(); ++tg) {
            int th = compose_idx(i, j, k, static_cast<int>(te),
                                 static_cast<int>(tg));
            Triple tr{slot_of[i][j][te], slot_of[j][k][tg], slot_of[i][k][th],
                      i, j, k};
            int id = static_cast<int>(triples.size());
            triples.push_back(tr);
            triples_at[tr.se].push_back(id);
            if (tr.sg != tr.se) triples_at[tr.sg].push_back(id);
            if (tr.sh != tr.se && tr.sh != tr.sg)
              triples_at[tr.sh].push_back(id);
          }

  std::vector<int> image(slots.size(), -1);
  std::vector<AutoEquivalence> found;
  auto consistent_at = [&](int s) {
    for (int tid : triples_at[s]) {
      const Triple& tr = triples[tid];
      if (image[tr.se] < 0 || image[tr.sg] < 0 || image[tr.sh] < 0) continue;
      if (compose_idx(tr.i, tr.j, tr.k, image[tr.se], image[tr.sg]) !=
          image[tr.sh])
        return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, size_t s) -> void {
    if (s == slots.size()) {
      // Invertible <=> every hom action is injective (sizes match).
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          std::vector<int> seen(w.hom[i][j].size(), 0);
          for (size_t t = 0; t < w.hom[i][j].size(); ++t)
            if (++seen[image[slot_of[i][j][t]]] > 1) return;
        }
      AutoEquivalence a;
      for (int i = 0; i <= n; ++i) a.obj.push_back(i);
      a.hom_action.resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        a.hom_action[i].resize(n + 1);
        for (int j = 0; j <= n; ++j)
          for (size_t t = 0; t < w.hom[i][j].size(); ++t)
            a.hom_action[i][j].push_back(image[slot_of[i][j][t]]);
      }
      found.push_back(std::move(a));
      return;
    }
    const Slot& sl = slots[s];
    if (image[s] >= 0) {  // identities are pre-assigned
      if (consistent_at(static_cast<int>(s))) self(self, s + 1);
      return;
    }
    for (size_t c = 0; c < w.hom[sl.i][sl.j].size(); ++c) {
      image[s] = static_cast<int>(c);
      if (consistent_at(static_cast<int>(s))) self(self, s + 1);
    }
    image[s] = -1;
  };
  for (int i = 0; i <= n; ++i)
    image[slot_of[i][i][id_at[i][0]]] = id_at[i][0];
  dfs(dfs, 0);

  // Match each auto to the unique r_I conjugation action.
  for (auto& a : found) {
    bool matched = false;
    for (int mask = 0; mask < (1 << n) && !matched; ++mask) {
      std::vector<bool> flips(n);
      for (int l = 0; l < n; ++l) flips[l] = (mask >> l) & 1;
      bool eq = true;
      for (int i = 0; i <= n && eq; ++i) {
        auto ri = rho_cells(i, flips);
        for (int j = 0; j <= n && eq; ++j) {
          auto rj = rho_cells(j, flips);
          for (size_t t = 0; t < w.hom[i][j].size() && eq; ++t) {
            const auto& f = w.hom[i][j][t].assignment;
            std::vector<int> conj(f.size());
            for (size_t c = 0; c < f.size(); ++c) conj[c] = rj[f[ri[c]]];
            if (idx[i][j].at(conj) != a.hom_action[i][j][t]) eq = false;
          }
        }
      }
      if (eq) {
        a.flips = flips;
        matched = true;
      }
    }
    if (!matched)
      throw InternalError("autos_of_globular: automorphism without an r_I");
  }
  std::sort(found.begin(), found.end(),
            [](const AutoEquivalence& a, const AutoEquivalence& b) {
              return a.flips < b.flips;
            });
  return found;
}

RIGroupReport verify_rI_group(int n,
                              const std::vector<FiniteStrictNCat>& corpus) {
  RIGroupReport rep;
  rep.group_law_ok = true;
  rep.gaunt_preserved = true;
  for (int mi = 0; mi < (1 << n); ++mi)
    for (int mj = 0; mj < (1 << n); ++mj) {
      std::vector<bool> fi(n), fj(n);
      for (int l = 0; l < n; ++l) {
        fi[l] = (mi >> l) & 1;
        fj[l] = (mj >> l) & 1;
      }
      for (const auto& x : corpus) {
        if (x.n != n) continue;
        FiniteStrictNCat lhs = opposite_r(opposite_r(x, fj), fi);
        FiniteStrictNCat rhs = opposite_r(x, xor_flips(fi, fj));
        if (!same_cat(lhs, rhs)) {
          rep.group_law_ok = false;
          rep.witness = "group law fails at I=" + std::to_string(mi) +
                        " J=" + std::to_string(mj);
        }
      }
    }
  for (int mi = 0; mi < (1 << n); ++mi) {
    std::vector<bool> fi(n);
    for (int l = 0; l < n; ++l) fi[l] = (mi >> l) & 1;
    for (const auto& x : corpus) {
      if (x.n != n || !is_gaunt(x).gaunt) continue;
      if (!is_gaunt(opposite_r(x, fi)).gaunt) {
        rep.gaunt_preserved = false;
        rep.witness = "gauntness lost at I=" + std::to_string(mi);
      }
    }
  }
  if (n >= 2) {
    // r with only level 1 flipped differs from r with only level 2 flipped:
    // compare comp_1 tables on a shape with nontrivial 1-composition.
    FiniteStrictNCat wtree =
        promote(realize(theta_parse("[2;[1],[0]]")).cat, n);
    std::vector<bool> e1(n, false), e2(n, false);
    e1[0] = true;
    e2[1] = true;
    rep.distinct_witnessed =
        opposite_r(wtree, e1).structures[0].comp !=
        opposite_r(wtree, e2).structures[0].comp;
    if (!rep.distinct_witnessed) rep.witness = "r_(1,0..) == r_(0,1..)";
  } else {
    rep.distinct_witnessed = true;  // vacuous below n = 2
  }
  return rep;
}

std::vector<RetractCertificate> retracts_of(const FiniteStrictNCat& x,
                                            const Budget& budget) {
  std::vector<RetractCertificate> out;
  for (const auto& e : fun_enum(x, x, budget)) {
    bool idem = true;
    for (int c = 0; c < x.size() && idem; ++c)
      idem = e.assignment[e.assignment[c]] == e.assignment[c];
    if (!idem) continue;
    std::vector<int> fixed, pos(x.size(), -1);
    for (int c = 0; c < x.size(); ++c)
      if (e.assignment[c] == c) {
        pos[c] = static_cast<int>(fixed.size());
        fixed.push_back(c);
      }
    FiniteStrictNCat s;
    s.n = x.n;
    for (int c : fixed) s.cells.push_back(x.cells[c]);
    s.structures.resize(x.n);
    for (int i = 1; i <= x.n; ++i) {
      auto& st = s.structures[i - 1];
      for (int c : fixed) {
        st.src.push_back(pos[x.src(i, c)]);
        st.tgt.push_back(pos[x.tgt(i, c)]);
      }
      for (int a : fixed)
        for (int b : fixed)
          if (x.composable(i, a, b))
            if (auto z = x.comp(i, a, b))
              st.comp[{pos[a], pos[b]}] = pos[*z];
    }
    require_valid(s, "retracts_of");
    bool dup = false;
    for (const auto& prev : out)
      if (is_iso(prev.splitting, s, nullptr, budget)) {
        dup = true;
        break;
      }
    if (dup) continue;
    RetractCertificate cert;
    cert.ambient = x;
    cert.idempotent = e;
    cert.splitting = s;
    cert.section = FunctorMap{s, x, fixed};
    std::vector<int> retr(x.size());
    for (int c = 0; c < x.size(); ++c) retr[c] = pos[e.assignment[c]];
    cert.retraction = FunctorMap{x, s, retr};
    out.push_back(std::move(cert));
  }
  return out;
}

namespace {

// Cheap iso-invariant bucketing key for the closure pool.
std::string iso_key(const FiniteStrictNCat& x) {
  std::string k = std::to_string(x.size());
  std::vector<int> dims(x.n + 1, 0);
  for (int c = 0; c < x.size(); ++c) ++dims[x.dim(c)];
  for (int d : dims) k += "." + std::to_string(d);
  for (int i = 1; i <= x.n; ++i)
    k += "/" + std::to_string(x.structures[i - 1].comp.size());
  return k;
}

}  // namespace

std::vector<FiniteStrictNCat> upsilon_window(int n, int size_bound, int rounds,
                                             const Budget& budget) {
  if (rounds < 0) rounds = n + 1;
  std::vector<FiniteStrictNCat> pool;
  std::map<std::string, std::vector<int>> buckets;
  auto add = [&](const FiniteStrictNCat& z) {
    if (z.size() > size_bound) return;
    std::string key = iso_key(z);
    for (int p : buckets[key])
      if (is_iso(pool[p], z, nullptr, budget)) return;
    buckets[key].push_back(static_cast<int>(pool.size()));
    pool.push_back(z);
  };
  for (int k = 0; k <= n; ++k) add(promote(cell(k), n));
  for (int r = 0; r < rounds; ++r) {
    size_t snap = pool.size();
    for (size_t a = 0; a < snap; ++a)
      for (size_t b = 0; b < snap; ++b)
        for (int k = 0; k <= n; ++k) {
          FiniteStrictNCat ck = promote(cell(k), n);
          try {
            auto fa = fun_enum(pool[a], ck, budget);
            auto fb = fun_enum(pool[b], ck, budget);
            for (const auto& f : fa)
              for (const auto& g : fb) add(fiber_product(f, g));
          } catch (const ResourceError&) {
            // bounded window: candidates beyond the budget are discarded
          }
        }
    snap = pool.size();
    for (size_t a = 0; a < snap; ++a)
      try {
        for (const auto& cert : retracts_of(pool[a], budget))
          add(cert.splitting);
      } catch (const ResourceError&) {
      }
  }
  return pool;
}

std::vector<CorpusFunctor> full_functor_family(
    const std::vector<FiniteStrictNCat>& corpus, const Budget& budget) {
  std::vector<CorpusFunctor> fam;
  for (size_t a = 0; a < corpus.size(); ++a)
    for (size_t b = 0; b < corpus.size(); ++b)
      for (const auto& f : fun_enum(corpus[a], corpus[b], budget))
        fam.push_back({static_cast<int>(a), static_cast<int>(b), f});
  return fam;
}

std::vector<std::vector<FunctorMap>> natural_endo_probe(
    const std::vector<FiniteStrictNCat>& corpus,
    const std::vector<CorpusFunctor>& family, const Budget& budget) {
  // Endo candidates per object; backtracking with incremental naturality
  // checks.  Objects with singleton endo sets (e.g. C_0) are effectively
  // forced first in corpus order, mirroring the base of the induction.
  std::vector<std::vector<FunctorMap>> cand;
  for (const auto& x : corpus) cand.push_back(fun_enum(x, x, budget));
  std::vector<int> pick(corpus.size(), -1);
  std::vector<std::vector<FunctorMap>> out;
  auto natural_upto = [&](size_t v) {
    for (const auto& cf : family) {
      size_t a = cf.from, b = cf.to;
      if (a > v || b > v || (a != v && b != v)) continue;
      const auto& ea = cand[a][pick[a]].assignment;
      const auto& eb = cand[b][pick[b]].assignment;
      for (size_t c = 0; c < cf.map.assignment.size(); ++c)
        if (cf.map.assignment[ea[c]] != eb[cf.map.assignment[c]]) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, size_t v) -> void {
    if (v == corpus.size()) {
      std::vector<FunctorMap> fam;
      for (size_t a = 0; a < corpus.size(); ++a) fam.push_back(cand[a][pick[a]]);
      out.push_back(std::move(fam));
      return;
    }
    for (size_t c = 0; c < cand[v].size(); ++c) {
      pick[v] = static_cast<int>(c);
      if (natural_upto(v)) self(self, v + 1);
    }
    pick[v] = -1;
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace nct
