/*
 *   Copyright 2026 the tgmod authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGMOD_HOMOTOPY_HPP
#define TGMOD_HOMOTOPY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgmod/monoidal.hpp"
#include "tgmod/moore.hpp"
#include "tgmod/simplicial.hpp"

namespace tgmod {

// ---------------------------------------------------------------------------
// Simplicial operators
// ---------------------------------------------------------------------------

/// Applies the simplicial operator X(op): X_dim -> X_{|op|-1} for a monotone
/// op: [m] -> [dim], via the epi-mono factorization: faces for the missing
/// target indices in descending order, then degeneracies for the repeated
/// source positions in ascending order.
inline Elem apply_operator(const SimplicialModule& x, const std::vector<int>& op,
                           int dim, Elem v) {
  // mono part: drop missing indices, descending
  std::vector<bool> hit(dim + 1, false);
  for (int val : op) hit[val] = true;
  std::size_t level = static_cast<std::size_t>(dim);
  for (int i = dim; i >= 0; --i) {
    if (!hit[i]) {
      v = x.d(level, static_cast<std::size_t>(i)).table[v];
      --level;
    }
  }
  // epi part: duplicate repeated positions, ascending
  for (std::size_t j = 0; j + 1 < op.size(); ++j)
    if (op[j] == op[j + 1]) {
      v = x.s(level, j).table[v];
      ++level;
    }
  if (level + 1 != op.size())
    throw StructuralError("apply_operator: dimension bookkeeping failed");
  return v;
}

// ---------------------------------------------------------------------------
// Mapping spaces Map(Delta[n] x Delta[1], X)
// ---------------------------------------------------------------------------

/// Delta[n] x Delta[1] truncated; simplex at level m is a pair of monotone
/// maps, encoded as sa * |d1[m]| + sb.
struct PrismComplex {
  int n = 0;
  std::size_t trunc = 0;
  DeltaComplex dn, d1;
  std::vector<std::size_t> level_sizes;

  std::size_t pair_index(std::size_t m, std::size_t sa, std::size_t sb) const {
    return sa * d1.simplices[m].size() + sb;
  }
  std::size_t part_a(std::size_t m, std::size_t s) const {
    return s / d1.simplices[m].size();
  }
  std::size_t part_b(std::size_t m, std::size_t s) const {
    return s % d1.simplices[m].size();
  }
};

inline PrismComplex prism_complex(int n, std::size_t trunc) {
  PrismComplex p;
  p.n = n;
  p.trunc = trunc;
  p.dn = delta_complex(n, trunc);
  p.d1 = delta_complex(1, trunc);
  p.level_sizes.resize(trunc + 1);
  for (std::size_t m = 0; m <= trunc; ++m)
    p.level_sizes[m] = p.dn.simplices[m].size() * p.d1.simplices[m].size();
  return p;
}

/// A simplicial map Prism(n) -> X as per-level value tables.
using PrismMap = std::vector<std::vector<Elem>>;

namespace detail {

/// Enumerates all simplicial maps Prism -> X by backtracking over the
/// non-degenerate simplices level by level; degenerate simplices are forced.
/// Deterministic lexicographic order of the concatenated tables.
inline std::vector<PrismMap> enumerate_prism_maps(const PrismComplex& p,
                                                  const SimplicialModule& x,
                                                  const WorkbenchConfig& cfg) {
  std::vector<PrismMap> out;
  PrismMap cur(p.trunc + 1);
  for (std::size_t m = 0; m <= p.trunc; ++m)
    cur[m].assign(p.level_sizes[m], 0);
  std::size_t explored = 0;

  // degeneracy witness: simplex s at level m equals s_i(tau)?
  // the joint value sequence has a repeat at position j iff both factors do.
  auto degeneracy_witness = [&](std::size_t m, std::size_t s)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (m == 0) return std::nullopt;
    const auto& va = p.dn.simplices[m][p.part_a(m, s)];
    const auto& vb = p.d1.simplices[m][p.part_b(m, s)];
    for (std::size_t j = 0; j + 1 < va.size(); ++j)
      if (va[j] == va[j + 1] && vb[j] == vb[j + 1]) {
        std::size_t ta = p.dn.at(m - 1, drop_entry(va, j));
        std::size_t tb = p.d1.at(m - 1, drop_entry(vb, j));
        return std::make_pair(j, p.pair_index(m - 1, ta, tb));
      }
    return std::nullopt;
  };

  auto face_of = [&](std::size_t m, std::size_t s, std::size_t i) {
    const auto& va = p.dn.simplices[m][p.part_a(m, s)];
    const auto& vb = p.d1.simplices[m][p.part_b(m, s)];
    return p.pair_index(m - 1, p.dn.at(m - 1, drop_entry(va, i)),
                        p.d1.at(m - 1, drop_entry(vb, i)));
  };

  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t m,
                                                         std::size_t s) -> bool {
    if (m > p.trunc) {
      out.push_back(cur);
      return true;
    }
    if (s == p.level_sizes[m]) return go(m + 1, 0);
    if (++explored > cfg.search_budget)
      throw BudgetError("mapping space enumeration exceeded the search budget");

    auto consistent = [&](Elem v) {
      if (m >= 1)
        for (std::size_t i = 0; i <= m; ++i)
          if (x.d(m, i).table[v] != cur[m - 1][face_of(m, s, i)]) return false;
      return true;
    };
    auto wit = degeneracy_witness(m, s);
    if (wit) {
      Elem v = x.s(m - 1, wit->first).table[cur[m - 1][wit->second]];
      if (!consistent(v)) return false;
      cur[m][s] = v;
      return go(m, s + 1);
    }
    bool any = false;
    for (Elem v = 0; v < x.levels[m]->size(); ++v) {
      if (!consistent(v)) continue;
      cur[m][s] = v;
      if (go(m, s + 1)) any = true;
    }
    return any;
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Path objects
// ---------------------------------------------------------------------------

/// The path object X^{Delta[1]}: level n is the mapping space
/// Map(Delta[n] x Delta[1], X) with pointwise module structure; faces and
/// degeneracies act by precomposition on the Delta[n] factor. Certification
/// runs the weak-equivalence check on the constant-path insertion and the
/// Kan check on (ev_0, ev_1).
struct PathObjectResult {
  SModulePtr object;
  SimplicialMorphism constant_path;  ///< X -> X^{Delta[1]}
  SimplicialMorphism ev0, ev1;       ///< X^{Delta[1]} -> X
  SimplicialMorphism to_square;      ///< X^{Delta[1]} -> X x X
  SModulePtr square;
  bool weq_certified = false;
  bool fibration_certified = false;
};

inline PathObjectResult path_object(const SModulePtr& x, const WorkbenchConfig& cfg = {}) {
  if (!is_fibrant(x, cfg))
    throw StructuralError("path_object: input is not fibrant");
  const std::size_t N = x->trunc;

  std::vector<PrismComplex> prisms;
  std::vector<std::vector<PrismMap>> maps;  // per level n
  for (std::size_t n = 0; n <= N; ++n) {
    prisms.push_back(prism_complex(static_cast<int>(n), N));
    maps.push_back(detail::enumerate_prism_maps(prisms[n], *x, cfg));
    if (maps[n].empty())
      throw StructuralError("path_object: empty mapping space");
  }
  std::vector<std::map<PrismMap, Elem>> index(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t i = 0; i < maps[n].size(); ++i)
      index[n].emplace(maps[n][i], static_cast<Elem>(i));

  // pointwise module structure on each level
  auto obj = std::make_shared<SimplicialModule>();
  obj->name = x->name + "^D1";
  obj->trunc = N;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t sz = maps[n].size();
    if (sz > cfg.element_budget)
      throw BudgetError("path_object: level carrier exceeds element budget");
    auto mod = std::make_shared<TernaryGammaModule>();
    mod->name = obj->name + "_" + std::to_string(n);
    mod->semiring = x->levels[0]->semiring;
    mod->carrier.size = sz;
    auto pointwise = [&](const PrismMap& a, auto&& f) {
      PrismMap r(a.size());
      for (std::size_t m = 0; m < a.size(); ++m) {
        r[m].resize(a[m].size());
        for (std::size_t s = 0; s < a[m].size(); ++s) r[m][s] = f(m, s);
      }
      return r;
    };
    {
      const PrismMap& probe = maps[n][0];
      PrismMap zm = pointwise(probe, [&](std::size_t m, std::size_t) {
        return x->levels[m]->zero();
      });
      auto it = index[n].find(zm);
      if (it == index[n].end())
        throw StructuralError("path_object: zero map missing from mapping space");
      mod->carrier.zero = it->second;
    }
    mod->carrier.add_table.resize(sz * sz);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        PrismMap r = pointwise(maps[n][i], [&](std::size_t m, std::size_t s) {
          return x->levels[m]->add(maps[n][i][m][s], maps[n][j][m][s]);
        });
        auto it = index[n].find(r);
        if (it == index[n].end())
          throw StructuralError("path_object: mapping space not closed under add");
        mod->carrier.add_table[i * sz + j] = it->second;
      }
    const auto scalars = scalar_tuples(*mod->semiring);
    const std::size_t t = mod->semiring->tsize(), g = mod->semiring->gamma_size;
    mod->action_table.resize(t * g * sz * g * t);
    for (const auto& sc : scalars)
      for (std::size_t i = 0; i < sz; ++i) {
        PrismMap r = pointwise(maps[n][i], [&](std::size_t m, std::size_t s) {
          return x->levels[m]->act(sc.t1, sc.al, maps[n][i][m][s], sc.be, sc.t2);
        });
        auto it = index[n].find(r);
        if (it == index[n].end())
          throw StructuralError("path_object: mapping space not closed under action");
        const std::size_t idx = (((sc.t1 * g + sc.al) * sz + i) * g + sc.be) * t + sc.t2;
        mod->action_table[idx] = it->second;
      }
    obj->levels.push_back(mod);
  }

  // faces/degeneracies by precomposition on the Delta[n] factor
  auto transport = [&](std::size_t nsrc, std::size_t ndst, auto&& value_map) {
    // g in Map(Prism(nsrc)) |-> g' in Map(Prism(ndst)), g'(sa', sb) =
    // g(value_map(sa'), sb)
    ModuleMorphism f;
    f.source = obj->levels[nsrc];
    f.target = obj->levels[ndst];
    f.table.resize(maps[nsrc].size());
    for (std::size_t gi = 0; gi < maps[nsrc].size(); ++gi) {
      PrismMap r(N + 1);
      for (std::size_t m = 0; m <= N; ++m) {
        r[m].resize(prisms[ndst].level_sizes[m]);
        for (std::size_t s = 0; s < prisms[ndst].level_sizes[m]; ++s) {
          const auto& va = prisms[ndst].dn.simplices[m][prisms[ndst].part_a(m, s)];
          std::vector<int> wa(va.size());
          for (std::size_t q = 0; q < va.size(); ++q) wa[q] = value_map(va[q]);
          std::size_t sa = prisms[nsrc].dn.at(m, wa);
          std::size_t src_s =
              prisms[nsrc].pair_index(m, sa, prisms[ndst].part_b(m, s));
          r[m][s] = maps[nsrc][gi][m][src_s];
        }
      }
      auto it = index[ndst].find(r);
      if (it == index[ndst].end())
        throw StructuralError("path_object: transported map escapes the space");
      f.table[gi] = it->second;
    }
    return f;
  };

  obj->faces.resize(N + 1);
  obj->degens.resize(N + 1);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->faces[n].push_back(transport(n, n - 1, [i](int v) {
        return v < static_cast<int>(i) ? v : v + 1;  // coface delta_i
      }));
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->degens[n].push_back(transport(n, n + 1, [i](int v) {
        return v <= static_cast<int>(i) ? v : v - 1;  // codegeneracy sigma_i
      }));

  PathObjectResult out;
  out.object = obj;

  // constant-path insertion: x |-> ((sa, sb) |-> X(sa)(x))
  out.constant_path.source = x;
  out.constant_path.target = obj;
  for (std::size_t n = 0; n <= N; ++n) {
    ModuleMorphism lvl;
    lvl.source = x->levels[n];
    lvl.target = obj->levels[n];
    lvl.table.resize(x->levels[n]->size());
    for (Elem v = 0; v < x->levels[n]->size(); ++v) {
      PrismMap r(N + 1);
      for (std::size_t m = 0; m <= N; ++m) {
        r[m].resize(prisms[n].level_sizes[m]);
        for (std::size_t s = 0; s < prisms[n].level_sizes[m]; ++s) {
          const auto& va = prisms[n].dn.simplices[m][prisms[n].part_a(m, s)];
          r[m][s] = apply_operator(*x, va, static_cast<int>(n), v);
        }
      }
      auto it = index[n].find(r);
      if (it == index[n].end())
        throw StructuralError("path_object: constant path escapes the space");
      lvl.table[v] = it->second;
    }
    out.constant_path.levels.push_back(std::move(lvl));
  }

  // evaluations at the two ends
  auto eval_at = [&](int endpoint) {
    SimplicialMorphism ev;
    ev.source = obj;
    ev.target = x;
    for (std::size_t n = 0; n <= N; ++n) {
      ModuleMorphism lvl;
      lvl.source = obj->levels[n];
      lvl.target = x->levels[n];
      lvl.table.resize(maps[n].size());
      std::vector<int> idvals(n + 1);
      for (std::size_t q = 0; q <= n; ++q) idvals[q] = static_cast<int>(q);
      std::size_t sa = prisms[n].dn.at(n, idvals);
      std::size_t sb = delta1_endpoint(prisms[n].d1, n, endpoint);
      std::size_t s = prisms[n].pair_index(n, sa, sb);
      for (std::size_t gi = 0; gi < maps[n].size(); ++gi)
        lvl.table[gi] = maps[n][gi][n][s];
      ev.levels.push_back(std::move(lvl));
    }
    return ev;
  };
  out.ev0 = eval_at(0);
  out.ev1 = eval_at(1);

  SProductResult square = simplicial_product(x, x, cfg);
  out.square = square.object;
  out.to_square.source = obj;
  out.to_square.target = square.object;
  for (std::size_t n = 0; n <= N; ++n) {
    ProductResult lvlprod;
    lvlprod.module = square.object->levels[n];
    lvlprod.proj0 = square.proj0.levels[n];
    lvlprod.proj1 = square.proj1.levels[n];
    out.to_square.levels.push_back(
        pair_morphism(out.ev0.levels[n], out.ev1.levels[n], lvlprod));
  }

  out.weq_certified = is_weak_equivalence(out.constant_path, cfg).is_weak_equivalence;
  out.fibration_certified = is_fibration(out.to_square, cfg).is_fibration;
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial homotopies
// ---------------------------------------------------------------------------

/// A homotopy H: X (x) Delta[1] -> Y between f (vertex-0 end) and g
/// (vertex-1 end), stored as its per-simplex components.
struct HomotopyResult {
  bool found = false;
  bool exhausted = false;  ///< search space fully explored within budget
  std::size_t explored = 0;
  /// components[n][sigma]: the morphism X_n -> Y_n at the Delta[1]-simplex
  /// sigma; ends are f.levels[n] and g.levels[n]
  std::vector<std::vector<ModuleMorphism>> components;
};

/// Searches for level-wise maps H: X (x) Delta[1] -> Y restricting to f and
/// g at the two ends. NotFound is exhaustive only within the budget and the
/// truncation, and says so via `exhausted`.
inline HomotopyResult find_simplicial_homotopy(const SimplicialMorphism& f,
                                               const SimplicialMorphism& g,
                                               const WorkbenchConfig& cfg = {}) {
  if (f.source != g.source && !(f.source->name == g.source->name))
    throw StructuralError("find_simplicial_homotopy: different sources");
  const SModulePtr& X = f.source;
  const SModulePtr& Y = f.target;
  const std::size_t N = X->trunc;
  SimplicialSet d1 = sset_delta1(N);

  HomotopyResult out;
  out.components.resize(N + 1);
  std::vector<std::vector<ModuleMorphism>> candidates(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    candidates[n] = enumerate_morphisms(X->levels[n], Y->levels[n], cfg);

  // chosen[n][sigma] = index into candidates[n] (ends pinned)
  std::vector<std::vector<std::optional<std::size_t>>> chosen(N + 1);
  std::vector<std::vector<const ModuleMorphism*>> comp(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    chosen[n].assign(d1.level_sizes[n], std::nullopt);
    comp[n].assign(d1.level_sizes[n], nullptr);
  }

  auto set_end = [&](std::size_t n, std::size_t sigma, const ModuleMorphism& m) {
    comp[n][sigma] = &m;
  };
  for (std::size_t n = 0; n <= N; ++n) {
    set_end(n, 0, f.levels[n]);                          // all-zeros simplex
    set_end(n, d1.level_sizes[n] - 1, g.levels[n]);      // all-ones simplex
  }

  // face constraint: comp[n-1][d_i sigma] o d_i^X == d_i^Y o comp[n][sigma]
  auto face_ok = [&](std::size_t n, std::size_t sigma, const ModuleMorphism& h) {
    for (std::size_t i = 0; i <= n; ++i) {
      const ModuleMorphism* below = comp[n - 1][d1.faces[n][i][sigma]];
      for (Elem v = 0; v < X->levels[n]->size(); ++v)
        if (below->table[X->d(n, i).table[v]] != Y->d(n, i).table[h.table[v]])
          return false;
    }
    return true;
  };
  // degeneracy constraint against level n-1: comp[n][s_i tau] o s_i^X ==
  // s_i^Y o comp[n-1][tau]
  auto degen_ok = [&](std::size_t n, std::size_t sigma, const ModuleMorphism& h) {
    for (std::size_t i = 0; i + 1 <= n; ++i)
      for (std::size_t tau = 0; tau < d1.level_sizes[n - 1]; ++tau) {
        if (d1.degens[n - 1][i][tau] != sigma) continue;
        const ModuleMorphism* below = comp[n - 1][tau];
        for (Elem v = 0; v < X->levels[n - 1]->size(); ++v)
          if (h.table[X->s(n - 1, i).table[v]] !=
              Y->s(n - 1, i).table[below->table[v]])
            return false;
      }
    return true;
  };

  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t n,
                                                         std::size_t sigma) -> bool {
    if (n > N) return true;
    if (sigma == d1.level_sizes[n]) return go(n + 1, 0);
    const bool pinned = comp[n][sigma] != nullptr;
    auto try_one = [&](const ModuleMorphism& h) -> bool {
      if (++out.explored > cfg.search_budget) {
        out.exhausted = false;
        return false;
      }
      if (n >= 1 && !face_ok(n, sigma, h)) return false;
      if (n >= 1 && !degen_ok(n, sigma, h)) return false;
      const ModuleMorphism* saved = comp[n][sigma];
      comp[n][sigma] = &h;
      bool done = go(n, sigma + 1);
      if (!done) comp[n][sigma] = saved;
      return done;
    };
    if (pinned) return try_one(*comp[n][sigma]);
    for (const auto& h : candidates[n])
      if (try_one(h)) return true;
    return false;
  };

  out.exhausted = true;
  out.found = go(0, 0);
  if (out.found) {
    out.components.assign(N + 1, {});
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t sigma = 0; sigma < d1.level_sizes[n]; ++sigma)
        out.components[n].push_back(*comp[n][sigma]);
  }
  if (out.explored > cfg.search_budget) out.exhausted = false;
  return out;
}

/// Replays a component family against the homotopy conditions: ends equal f
/// and g, faces and degeneracies commute. Used both for searched homotopies
/// and for canonical candidates supplied by constructions.
inline bool verify_homotopy_components(
    const SimplicialMorphism& f, const SimplicialMorphism& g,
    const std::vector<std::vector<ModuleMorphism>>& comps) {
  const SModulePtr& X = f.source;
  const SModulePtr& Y = f.target;
  const std::size_t N = X->trunc;
  SimplicialSet d1 = sset_delta1(N);
  for (std::size_t n = 0; n <= N; ++n) {
    if (comps[n].size() != d1.level_sizes[n]) return false;
    if (comps[n].front().table != f.levels[n].table) return false;
    if (comps[n].back().table != g.levels[n].table) return false;
  }
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t sigma = 0; sigma < d1.level_sizes[n]; ++sigma)
      for (std::size_t i = 0; i <= n; ++i) {
        const ModuleMorphism& below = comps[n - 1][d1.faces[n][i][sigma]];
        for (Elem v = 0; v < X->levels[n]->size(); ++v)
          if (below.table[X->d(n, i).table[v]] !=
              Y->d(n, i).table[comps[n][sigma].table[v]])
            return false;
      }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t tau = 0; tau < d1.level_sizes[n]; ++tau)
      for (std::size_t i = 0; i <= n; ++i) {
        std::size_t sigma = d1.degens[n][i][tau];
        for (Elem v = 0; v < X->levels[n]->size(); ++v)
          if (comps[n + 1][sigma].table[X->s(n, i).table[v]] !=
              Y->s(n, i).table[comps[n][tau].table[v]])
            return false;
      }
  return true;
}

/// Rebuilds the homotopy as an honest morphism X (x) Delta[1] -> Y for
/// replay: H_n(tuple) = sum over sigma of components[n][sigma](v_sigma).
inline SimplicialMorphism homotopy_as_morphism(const SimplicialMorphism& f,
                                               const HomotopyResult& h,
                                               const DSumResult& prism) {
  const SModulePtr& X = f.source;
  const SModulePtr& Y = f.target;
  SimplicialMorphism H;
  H.source = prism.object;
  H.target = Y;
  for (std::size_t n = 0; n <= X->trunc; ++n) {
    const std::size_t copies = prism.sset.level_sizes[n];
    const std::size_t base = X->levels[n]->size();
    ModuleMorphism lvl;
    lvl.source = prism.object->levels[n];
    lvl.target = Y->levels[n];
    lvl.table.resize(prism.object->levels[n]->size());
    for (std::size_t u = 0; u < lvl.table.size(); ++u) {
      Elem acc = Y->levels[n]->zero();
      for (std::size_t c = 0; c < copies; ++c) {
        Elem digit = detail::tuple_digit(u, c, copies, base);
        acc = Y->levels[n]->add(acc, h.components[n][c].table[digit]);
      }
      lvl.table[u] = acc;
    }
    H.levels.push_back(std::move(lvl));
  }
  return H;
}

// ---------------------------------------------------------------------------
// Derived hom on a supplied resolution
// ---------------------------------------------------------------------------

/// Reading note: pi_n of the derived mapping object is computed in the
/// cosimplicial-cochain sense (equalizer in degree 0, alternating-sum
/// cochain homology above, valid under group-completeness); each report
/// records this choice.
struct DerivedHomResult {
  std::size_t degree = 0;
  bool available = false;
  std::string reason;
  ModulePtr result;
  std::string reading = "cosimplicial-cochain";
};

/// L_n Hom(M, N) from a user-supplied resolution p with augmentation
/// eps: P_0 -> m. The augmentation must induce a weak equivalence to the
/// constant object (resolution check). Degree 0 is the equalizer of the two
/// cofaces; degrees >= 1 need every Hom(P_k, N) involved to be
/// group-complete, otherwise the degree is reported unavailable.
inline DerivedHomResult derived_hom(const SModulePtr& p, const ModuleMorphism& eps,
                                    const ModulePtr& n, std::size_t degree,
                                    const WorkbenchConfig& cfg = {}) {
  DerivedHomResult out;
  out.degree = degree;
  if (!(*eps.source == *p->levels[0]))
    throw StructuralError("derived_hom: augmentation source is not P_0");

  // augmentation as a simplicial map to the constant object
  SModulePtr cm = constant_object(eps.target, p->trunc);
  SimplicialMorphism aug;
  aug.source = p;
  aug.target = cm;
  aug.levels.push_back(eps);
  for (std::size_t k = 1; k <= p->trunc; ++k)
    aug.levels.push_back(compose(aug.levels[k - 1], p->d(k, 0)));
  if (!check_simplicial_morphism(aug).passed())
    throw StructuralError("derived_hom: augmentation is not simplicial");
  if (!is_weak_equivalence(aug, cfg).is_weak_equivalence)
    throw StructuralError("derived_hom: input is not a resolution (augmentation "
                          "is not a weak equivalence)");

  if (degree + 1 > p->trunc) {
    out.available = false;
    out.reason = "degree beyond the truncation of the resolution";
    return out;
  }

  std::vector<InternalHomResult> homs;  // C^k = Hom(P_k, n), k <= degree+1
  for (std::size_t k = 0; k <= degree + 1; ++k) {
    homs.push_back(internal_hom(p->levels[k], n, cfg));
    if (!homs.back().module)
      throw StructuralError("derived_hom: Hom level is not a module");
  }
  auto coface = [&](std::size_t k, std::size_t i, Elem phi) -> Elem {
    // d^i: C^{k-1} -> C^k, phi |-> phi o d_i
    ModuleMorphism comp = compose(homs[k - 1].carrier[phi], p->d(k, i));
    for (std::size_t j = 0; j < homs[k].carrier.size(); ++j)
      if (homs[k].carrier[j].table == comp.table) return static_cast<Elem>(j);
    throw StructuralError("derived_hom: coface escapes the Hom carrier");
  };

  if (degree == 0) {
    std::vector<Elem> subset;
    for (Elem phi = 0; phi < homs[0].module->size(); ++phi)
      if (coface(1, 0, phi) == coface(1, 1, phi)) subset.push_back(phi);
    SubmoduleResult eq = submodule_from_subset(homs[0].module, subset,
                                               "L0Hom(" + p->name + "," + n->name + ")");
    out.available = true;
    out.result = eq.module;
    return out;
  }

  for (std::size_t k = degree - 1; k <= degree + 1; ++k)
    if (!group_complete(homs[k].module->carrier)) {
      out.available = false;
      out.reason = "Hom(P_" + std::to_string(k) + ", N) is not group-complete; "
                   "alternating sums are undefined";
      return out;
    }

  auto differential = [&](std::size_t k, Elem phi) -> Elem {
    // delta^k = sum_i (-1)^i d^i : C^k -> C^{k+1}
    const auto& tgt = *homs[k + 1].module;
    std::vector<Elem> neg = negation_table(tgt.carrier);
    Elem acc = tgt.zero();
    for (std::size_t i = 0; i <= k + 1; ++i) {
      Elem term = coface(k + 1, i, phi);
      if (i % 2 == 1) term = neg[term];
      acc = tgt.add(acc, term);
    }
    return acc;
  };

  std::vector<Elem> kernel;
  for (Elem phi = 0; phi < homs[degree].module->size(); ++phi)
    if (differential(degree, phi) == homs[degree + 1].module->zero())
      kernel.push_back(phi);
  SubmoduleResult z = submodule_from_subset(homs[degree].module, kernel, "cycles");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem psi = 0; psi < homs[degree - 1].module->size(); ++psi) {
    Elem b = differential(degree - 1, psi);
    auto it = std::lower_bound(z.elements.begin(), z.elements.end(), b);
    if (it == z.elements.end() || *it != b)
      throw StructuralError("derived_hom: boundary is not a cycle");
    pairs.emplace_back(static_cast<Elem>(it - z.elements.begin()),
                       z.module->zero());
  }
  Congruence c = congruence_closure(z.module, pairs);
  QuotientResult q = quotient(z.module, c,
                              "L" + std::to_string(degree) + "Hom(" + p->name + "," +
                                  n->name + ")");
  out.available = true;
  out.result = q.module;
  return out;
}

}  // namespace tgmod

#endif  // TGMOD_HOMOTOPY_HPP
