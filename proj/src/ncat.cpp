#include "nct/ncat.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace nct {

int FiniteStrictNCat::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (cells[i] == name) return i;
  return -1;
}

std::optional<int> FiniteStrictNCat::comp(int i, int x, int y) const {
  const auto& m = structures[i - 1].comp;
  auto it = m.find({x, y});
  if (it == m.end()) return std::nullopt;
  return it->second;
}

int FiniteStrictNCat::dim(int c) const {
  for (int i = n; i >= 1; --i)
    if (!is_identity_at(i, c)) return i;
  return 0;
}

std::vector<int> FiniteStrictNCat::cells_of_dim_le(int k) const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c)
    if (dim(c) <= k) out.push_back(c);
  return out;
}

FunctorMap identity_functor(const FiniteStrictNCat& x) {
  FunctorMap f{x, x, {}};
  f.assignment.resize(x.size());
  for (int c = 0; c < x.size(); ++c) f.assignment[c] = c;
  return f;
}

FunctorMap compose(const FunctorMap& g, const FunctorMap& f) {
  if (g.source.cells != f.target.cells)
    throw InputError("compose: functor domains do not match");
  FunctorMap h{f.source, g.target, {}};
  h.assignment.resize(f.source.size());
  for (int c = 0; c < f.source.size(); ++c)
    h.assignment[c] = g.assignment[f.assignment[c]];
  return h;
}

bool is_functor(const FiniteStrictNCat& a, const FiniteStrictNCat& x,
                const std::vector<int>& h) {
  if (a.n != x.n) return false;
  if (static_cast<int>(h.size()) != a.size()) return false;
  for (int c = 0; c < a.size(); ++c)
    if (h[c] < 0 || h[c] >= x.size()) return false;
  for (int i = 1; i <= a.n; ++i) {
    for (int c = 0; c < a.size(); ++c) {
      if (h[a.src(i, c)] != x.src(i, h[c])) return false;
      if (h[a.tgt(i, c)] != x.tgt(i, h[c])) return false;
    }
    for (const auto& [xy, z] : a.structures[i - 1].comp) {
      auto w = x.comp(i, h[xy.first], h[xy.second]);
      if (!w || *w != h[z]) return false;
    }
  }
  return true;
}

namespace {

void add(ValidationReport& r, const FiniteStrictNCat& x, std::string axiom,
         std::vector<int> witness, std::string detail) {
  AxiomViolation v;
  v.axiom = std::move(axiom);
  for (int c : witness) v.witness.push_back(x.cells[c]);
  v.detail = std::move(detail);
  r.violations.push_back(std::move(v));
}

}  // namespace

ValidationReport validate(const FiniteStrictNCat& x) {
  ValidationReport r;
  const int sz = x.size();
  if (x.n < 0) {
    r.input_errors.push_back("negative dimension bound");
    return r;
  }
  if (static_cast<int>(x.structures.size()) != x.n) {
    r.input_errors.push_back("structure count does not equal n");
    return r;
  }
  {
    std::vector<std::string> sorted = x.cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      r.input_errors.push_back("duplicate cell identifier");
  }
  for (int i = 1; i <= x.n; ++i) {
    const auto& st = x.structures[i - 1];
    if (static_cast<int>(st.src.size()) != sz ||
        static_cast<int>(st.tgt.size()) != sz) {
      r.input_errors.push_back("src/tgt map of structure " + std::to_string(i) +
                               " has wrong size");
      return r;
    }
    for (int c = 0; c < sz; ++c)
      if (st.src[c] < 0 || st.src[c] >= sz || st.tgt[c] < 0 || st.tgt[c] >= sz) {
        r.input_errors.push_back("src/tgt out of range in structure " +
                                 std::to_string(i));
        return r;
      }
    for (const auto& [xy, z] : st.comp)
      if (xy.first < 0 || xy.first >= sz || xy.second < 0 || xy.second >= sz ||
          z < 0 || z >= sz) {
        r.input_errors.push_back("comp entry references unknown cell in structure " +
                                 std::to_string(i));
        return r;
      }
  }
  if (!r.input_errors.empty()) return r;

  for (int i = 1; i <= x.n; ++i) {
    // s^2 = ts = s, t^2 = st = t
    for (int c = 0; c < sz; ++c) {
      int s = x.src(i, c), t = x.tgt(i, c);
      if (x.src(i, s) != s || x.tgt(i, s) != s)
        add(r, x, "idempotency", {c}, "src image not fixed at level " + std::to_string(i));
      if (x.tgt(i, t) != t || x.src(i, t) != t)
        add(r, x, "idempotency", {c}, "tgt image not fixed at level " + std::to_string(i));
    }
    // domain of comp is exactly the composable pairs
    for (const auto& [xy, z] : x.structures[i - 1].comp) {
      (void)z;
      if (!x.composable(i, xy.first, xy.second))
        add(r, x, "domain", {xy.first, xy.second},
            "comp defined on non-composable pair at level " + std::to_string(i));
    }
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b)
        if (x.composable(i, a, b) && !x.comp(i, a, b))
          add(r, x, "domain", {a, b},
              "missing composite at level " + std::to_string(i));
    // boundaries of composites
    for (const auto& [xy, z] : x.structures[i - 1].comp) {
      if (x.src(i, z) != x.src(i, xy.second) || x.tgt(i, z) != x.tgt(i, xy.first))
        add(r, x, "boundary", {xy.first, xy.second, z},
            "composite has wrong src/tgt at level " + std::to_string(i));
    }
    // units
    for (int c = 0; c < sz; ++c) {
      int t = x.tgt(i, c), s = x.src(i, c);
      auto l = x.comp(i, t, c);
      if (l && *l != c) add(r, x, "unit", {t, c}, "left unit law at level " + std::to_string(i));
      auto rr = x.comp(i, c, s);
      if (rr && *rr != c) add(r, x, "unit", {c, s}, "right unit law at level " + std::to_string(i));
    }
    // associativity
    for (const auto& [xy, z] : x.structures[i - 1].comp) {
      int a = xy.first, b = xy.second;
      for (int c = 0; c < sz; ++c) {
        if (!x.composable(i, b, c)) continue;
        auto bc = x.comp(i, b, c);
        if (!bc) continue;
        auto lhs = x.comp(i, z, c);
        auto rhs = x.comp(i, a, *bc);
        if (lhs && rhs && *lhs != *rhs)
          add(r, x, "associativity", {a, b, c},
              "comp not associative at level " + std::to_string(i));
      }
    }
  }

  // cross-structure laws, i < j
  for (int i = 1; i <= x.n; ++i)
    for (int j = i + 1; j <= x.n; ++j) {
      for (int c = 0; c < sz; ++c) {
        // s_i, t_i are functors for structure j
        if (x.src(j, x.src(i, c)) != x.src(i, x.src(j, c)) ||
            x.tgt(j, x.src(i, c)) != x.src(i, x.tgt(j, c)))
          add(r, x, "functoriality", {c},
              "src_" + std::to_string(i) + " incompatible with structure " + std::to_string(j));
        if (x.src(j, x.tgt(i, c)) != x.tgt(i, x.src(j, c)) ||
            x.tgt(j, x.tgt(i, c)) != x.tgt(i, x.tgt(j, c)))
          add(r, x, "functoriality", {c},
              "tgt_" + std::to_string(i) + " incompatible with structure " + std::to_string(j));
        // globularity: images of s_i, t_i consist of structure-j identities
        if (!x.is_identity_at(j, x.src(i, c)) || !x.is_identity_at(j, x.tgt(i, c)))
          add(r, x, "globularity", {c},
              "boundary at level " + std::to_string(i) +
                  " is not an identity at level " + std::to_string(j));
      }
      for (const auto& [xy, z] : x.structures[j - 1].comp) {
        auto ls = x.comp(j, x.src(i, xy.first), x.src(i, xy.second));
        if (!ls || *ls != x.src(i, z))
          add(r, x, "functoriality", {xy.first, xy.second},
              "src_" + std::to_string(i) + " does not preserve comp_" + std::to_string(j));
        auto lt = x.comp(j, x.tgt(i, xy.first), x.tgt(i, xy.second));
        if (!lt || *lt != x.tgt(i, z))
          add(r, x, "functoriality", {xy.first, xy.second},
              "tgt_" + std::to_string(i) + " does not preserve comp_" + std::to_string(j));
      }
      // comp_i is a functor for structure j: boundaries ...
      for (const auto& [xy, z] : x.structures[i - 1].comp) {
        auto bs = x.comp(i, x.src(j, xy.first), x.src(j, xy.second));
        if (!bs || *bs != x.src(j, z))
          add(r, x, "functoriality", {xy.first, xy.second},
              "comp_" + std::to_string(i) + " incompatible with src_" + std::to_string(j));
        auto bt = x.comp(i, x.tgt(j, xy.first), x.tgt(j, xy.second));
        if (!bt || *bt != x.tgt(j, z))
          add(r, x, "functoriality", {xy.first, xy.second},
              "comp_" + std::to_string(i) + " incompatible with tgt_" + std::to_string(j));
      }
      // ... and interchange
      for (const auto& [ab, u] : x.structures[j - 1].comp)
        for (const auto& [cd, v] : x.structures[j - 1].comp) {
          int a = ab.first, b = ab.second, c = cd.first, d = cd.second;
          if (!x.composable(i, a, c) || !x.composable(i, b, d)) continue;
          auto ac = x.comp(i, a, c), bd = x.comp(i, b, d);
          auto uv = x.comp(i, u, v);
          if (!ac || !bd || !uv) continue;
          auto both = x.comp(j, *ac, *bd);
          if (!both || *both != *uv)
            add(r, x, "interchange", {a, b, c, d},
                "interchange fails between levels " + std::to_string(i) + "," +
                    std::to_string(j));
        }
    }

  r.ok = r.violations.empty() && r.input_errors.empty();
  return r;
}

void require_valid(const FiniteStrictNCat& x, const std::string& who) {
  ValidationReport r = validate(x);
  if (!r.ok) {
    std::string msg = who + ": constructed object fails validation:";
    for (const auto& v : r.violations) {
      msg += " [" + v.axiom + ": " + v.detail + "]";
      if (msg.size() > 400) break;
    }
    for (const auto& e : r.input_errors) msg += " [input: " + e + "]";
    throw InternalError(msg);
  }
}

std::string to_json(const FiniteStrictNCat& x) {
  nlohmann::ordered_json j;
  j["n"] = x.n;
  j["cells"] = x.cells;
  j["structures"] = nlohmann::ordered_json::array();
  for (const auto& st : x.structures) {
    nlohmann::ordered_json s;
    nlohmann::ordered_json src = nlohmann::ordered_json::object();
    nlohmann::ordered_json tgt = nlohmann::ordered_json::object();
    for (int c = 0; c < x.size(); ++c) {
      src[x.cells[c]] = x.cells[st.src[c]];
      tgt[x.cells[c]] = x.cells[st.tgt[c]];
    }
    s["src"] = src;
    s["tgt"] = tgt;
    nlohmann::ordered_json comp = nlohmann::ordered_json::array();
    for (const auto& [xy, z] : st.comp)
      comp.push_back({x.cells[xy.first], x.cells[xy.second], x.cells[z]});
    s["comp"] = comp;
    j["structures"].push_back(s);
  }
  return j.dump(2);
}

FiniteStrictNCat ncat_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad json: ") + e.what());
  }
  FiniteStrictNCat x;
  try {
    x.n = j.at("n").get<int>();
    x.cells = j.at("cells").get<std::vector<std::string>>();
    if (static_cast<int>(j.at("structures").size()) != x.n)
      throw InputError("structure count does not equal n");
    for (const auto& s : j.at("structures")) {
      CatStructure st;
      st.src.resize(x.cells.size());
      st.tgt.resize(x.cells.size());
      auto idx = [&](const std::string& name) {
        int k = x.index_of(name);
        if (k < 0) throw InputError("unknown cell in json: " + name);
        return k;
      };
      for (const auto& [k, v] : s.at("src").items()) st.src[idx(k)] = idx(v.get<std::string>());
      for (const auto& [k, v] : s.at("tgt").items()) st.tgt[idx(k)] = idx(v.get<std::string>());
      for (const auto& e : s.at("comp")) {
        if (e.size() != 3) throw InputError("comp entry must be a triple");
        st.comp[{idx(e[0].get<std::string>()), idx(e[1].get<std::string>())}] =
            idx(e[2].get<std::string>());
      }
      x.structures.push_back(std::move(st));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad ncat json: ") + e.what());
  }
  return x;
}

}  // namespace nct
