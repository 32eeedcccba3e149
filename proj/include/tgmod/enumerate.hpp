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

#ifndef TGMOD_ENUMERATE_HPP
#define TGMOD_ENUMERATE_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tgmod/construct.hpp"
#include "tgmod/core.hpp"

namespace tgmod {

namespace detail {

/// |base|^exp clamped; used for search-space bound checks.
inline double pow_size(std::size_t base, std::size_t exp) {
  return std::pow(static_cast<double>(base), static_cast<double>(exp));
}

}  // namespace detail

/// Greedy generating set: walks elements in index order and keeps those not
/// already in the closure of the earlier picks. A morphism is determined by
/// its values on this set, which is what makes Hom enumeration tractable.
inline std::vector<Elem> module_generators(const TernaryGammaModule& m) {
  std::vector<Elem> gens;
  std::vector<Elem> closed = submodule_closure(m, {});
  std::vector<bool> in(m.size(), false);
  for (Elem x : closed) in[x] = true;
  for (Elem x = 0; x < m.size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    closed = submodule_closure(m, gens);
    std::fill(in.begin(), in.end(), false);
    for (Elem y : closed) in[y] = true;
  }
  return gens;
}

/// Exactly the set of maps passing check_morphism, in lexicographic table
/// order. The search assigns images to a generating set and propagates
/// through add and the action; a full table check guards the propagation.
///
/// The documented precondition bounds the naive search space |N|^|M|; the
/// error names that number.
inline std::vector<ModuleMorphism> enumerate_morphisms(const ModulePtr& m,
                                                       const ModulePtr& n,
                                                       const WorkbenchConfig& cfg = {}) {
  if (!same_semiring(*m, *n))
    throw StructuralError("enumerate_morphisms: different semirings");
  const double naive = detail::pow_size(n->size(), m->size());
  if (naive > static_cast<double>(cfg.search_budget))
    throw BudgetError("enumerate_morphisms: search space too large: |N|^|M| = " +
                      std::to_string(n->size()) + "^" + std::to_string(m->size()));

  const std::vector<Elem> gens = module_generators(*m);
  const auto scalars = scalar_tuples(*m->semiring);
  const std::size_t sz = m->size();
  const Elem unset = static_cast<Elem>(n->size());

  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> choice(gens.size(), 0);
  bool more = true;
  while (more) {
    std::vector<Elem> f(sz, unset);
    f[m->zero()] = n->zero();
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      if (f[gens[i]] != unset && f[gens[i]] != choice[i]) ok = false;
      f[gens[i]] = choice[i];
    }
    // propagate to a fixpoint
    while (ok) {
      bool changed = false;
      for (Elem x = 0; x < sz && ok; ++x) {
        if (f[x] == unset) continue;
        for (Elem y = 0; y <= x && ok; ++y) {
          if (f[y] == unset) continue;
          Elem z = m->add(x, y);
          Elem v = n->add(f[x], f[y]);
          if (f[z] == unset) {
            f[z] = v;
            changed = true;
          } else if (f[z] != v) {
            ok = false;
          }
        }
        for (const auto& sc : scalars) {
          if (!ok) break;
          Elem z = m->act(sc.t1, sc.al, x, sc.be, sc.t2);
          Elem v = n->act(sc.t1, sc.al, f[x], sc.be, sc.t2);
          if (f[z] == unset) {
            f[z] = v;
            changed = true;
          } else if (f[z] != v) {
            ok = false;
          }
        }
      }
      if (!changed) break;
    }
    if (ok) {
      for (Elem x = 0; x < sz; ++x)
        if (f[x] == unset) ok = false;  // generators failed to generate
    }
    if (ok) {
      // full verification
      for (Elem x = 0; x < sz && ok; ++x)
        for (Elem y = 0; y < sz && ok; ++y)
          if (f[m->add(x, y)] != n->add(f[x], f[y])) ok = false;
      for (const auto& sc : scalars) {
        if (!ok) break;
        for (Elem x = 0; x < sz && ok; ++x)
          if (f[m->act(sc.t1, sc.al, x, sc.be, sc.t2)] !=
              n->act(sc.t1, sc.al, f[x], sc.be, sc.t2))
            ok = false;
      }
      if (ok) tables.push_back(std::move(f));
    }
    // odometer over generator images
    more = false;
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (++choice[i] < n->size()) {
        more = true;
        break;
      }
      choice[i] = 0;
    }
    if (gens.empty()) break;
  }

  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  std::vector<ModuleMorphism> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    ModuleMorphism f;
    f.source = m;
    f.target = n;
    f.table = std::move(t);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instance enumeration
// ---------------------------------------------------------------------------

/// All commutative monoid structures on {0..size-1} with zero = 0, in lex
/// order of the add table.
inline std::vector<FiniteCommutativeMonoid> enumerate_monoids(std::size_t size) {
  std::vector<FiniteCommutativeMonoid> out;
  // free cells: unordered pairs (x, y) with 1 <= x <= y
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < size; ++x)
    for (Elem y = x; y < size; ++y) cells.emplace_back(x, y);
  std::vector<Elem> vals(cells.size(), 0);
  bool more = true;
  while (more) {
    FiniteCommutativeMonoid m;
    m.size = size;
    m.zero = 0;
    m.add_table.assign(size * size, 0);
    for (Elem x = 0; x < size; ++x) {
      m.add_table[0 * size + x] = x;
      m.add_table[x * size + 0] = x;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [x, y] = cells[c];
      m.add_table[x * size + y] = vals[c];
      m.add_table[y * size + x] = vals[c];
    }
    if (check_monoid(m).passed()) out.push_back(std::move(m));
    more = false;
    for (std::size_t i = vals.size(); i-- > 0;) {
      if (++vals[i] < size) {
        more = true;
        break;
      }
      vals[i] = 0;
    }
    if (cells.empty()) break;
  }
  return out;
}

enum class EnumerationMode { Exhaustive, Sampled };

/// Exhaustive mode (t_size <= 2, gamma_size = 1 only) emits one
/// representative per isomorphism class; every emitted instance passes
/// check_semiring under the configured strictness. Sampled mode runs seeded
/// backtracking over the ternary table and makes no completeness claim.
inline std::vector<TernaryGammaSemiring> enumerate_semirings(
    std::size_t t_size, std::size_t gamma_size, EnumerationMode mode,
    const WorkbenchConfig& cfg = {}, std::size_t max_count = 0) {
  if (t_size == 0 || gamma_size == 0)
    throw StructuralError("enumerate_semirings: empty sizes");
  std::vector<TernaryGammaSemiring> found;

  auto emit = [&](TernaryGammaSemiring s) {
    for (const auto& prev : found)
      if (semirings_isomorphic(prev, s)) return;
    s.name = "E" + std::to_string(t_size) + "g" + std::to_string(gamma_size) + "_" +
             std::to_string(found.size());
    found.push_back(std::move(s));
  };

  const std::size_t cells = t_size * gamma_size * t_size * gamma_size * t_size;

  if (mode == EnumerationMode::Exhaustive) {
    if (t_size > 2 || gamma_size != 1)
      throw BudgetError(
          "enumerate_semirings: exhaustive mode supports t_size <= 2 and "
          "gamma_size = 1 only");
    for (const auto& mon : enumerate_monoids(t_size)) {
      std::vector<Elem> tv(cells, 0);
      bool more = true;
      while (more) {
        TernaryGammaSemiring s;
        s.carrier = mon;
        s.gamma_size = gamma_size;
        s.ternary_table = tv;
        if (check_semiring(s, cfg.strict_zero).passed()) emit(std::move(s));
        more = false;
        for (std::size_t i = tv.size(); i-- > 0;) {
          if (++tv[i] < t_size) {
            more = true;
            break;
          }
          tv[i] = 0;
        }
      }
    }
    return found;
  }

  // Sampled: randomized backtracking over free cells. Strict mode pins every
  // cell with a zero argument to zero up front, which is what keeps the
  // search space workable.
  std::mt19937_64 rng(cfg.seed);
  std::size_t attempts = 0;
  const std::size_t want = max_count == 0 ? 8 : max_count;
  for (const auto& mon : enumerate_monoids(t_size)) {
    std::vector<Elem> tv(cells, 0);
    std::vector<std::size_t> free_cells;
    for (std::size_t i = 0; i < cells; ++i) {
      std::size_t rest = i;
      const std::size_t g = gamma_size, n = t_size;
      Elem c = static_cast<Elem>(rest % n);
      rest /= n * g;
      Elem b = static_cast<Elem>(rest % n);
      rest /= n * g;
      Elem a = static_cast<Elem>(rest % n);
      if (cfg.strict_zero && (a == mon.zero || b == mon.zero || c == mon.zero))
        continue;  // pinned to zero
      free_cells.push_back(i);
    }
    std::vector<std::vector<Elem>> order(free_cells.size());
    for (std::size_t i = 0; i < free_cells.size(); ++i) {
      order[i].resize(t_size);
      for (Elem v = 0; v < t_size; ++v) order[i][v] = v;
      std::shuffle(order[i].begin(), order[i].end(), rng);
    }
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
      if (found.size() >= want) return true;
      if (++attempts > cfg.search_budget)
        throw BudgetError("enumerate_semirings: sampled search budget exhausted");
      if (k == free_cells.size()) {
        TernaryGammaSemiring s;
        s.carrier = mon;
        s.gamma_size = gamma_size;
        s.ternary_table = tv;
        if (check_semiring(s, cfg.strict_zero).passed()) emit(std::move(s));
        return found.size() >= want;
      }
      for (Elem v : order[k]) {
        tv[free_cells[k]] = v;
        if (go(k + 1)) return true;
      }
      tv[free_cells[k]] = 0;
      return false;
    };
    go(0);
    if (found.size() >= want) break;
  }
  return found;
}

/// All module structures of the given carrier size over a validated
/// semiring, deterministic order. Brute force with strict-mode cell pinning;
/// meant for desk-scale corpus generation.
inline std::vector<ModulePtr> enumerate_modules(const SemiringPtr& s,
                                                std::size_t size,
                                                const WorkbenchConfig& cfg = {}) {
  std::vector<ModulePtr> out;
  const std::size_t t = s->tsize(), g = s->gamma_size;
  const std::size_t cells = t * g * size * g * t;
  for (const auto& mon : enumerate_monoids(size)) {
    std::vector<std::size_t> free_cells;
    std::vector<Elem> av(cells, mon.zero);
    for (std::size_t i = 0; i < cells; ++i) {
      std::size_t rest = i;
      Elem t2 = static_cast<Elem>(rest % t);
      rest /= t * g;
      Elem m = static_cast<Elem>(rest % size);
      rest /= size * g;
      Elem t1 = static_cast<Elem>(rest % t);
      if (cfg.strict_zero &&
          (t1 == s->carrier.zero || t2 == s->carrier.zero || m == mon.zero))
        continue;
      free_cells.push_back(i);
    }
    if (detail::pow_size(size, free_cells.size()) >
        static_cast<double>(cfg.search_budget))
      throw BudgetError("enumerate_modules: table space too large");
    std::vector<Elem> vals(free_cells.size(), 0);
    bool more = true;
    while (more) {
      for (std::size_t i = 0; i < free_cells.size(); ++i) av[free_cells[i]] = vals[i];
      auto mod = std::make_shared<TernaryGammaModule>();
      mod->name = "M" + std::to_string(size) + "_" + std::to_string(out.size());
      mod->semiring = s;
      mod->carrier = mon;
      mod->action_table = av;
      if (check_module(*mod, cfg.strict_zero).passed()) out.push_back(std::move(mod));
      more = false;
      for (std::size_t i = vals.size(); i-- > 0;) {
        if (++vals[i] < size) {
          more = true;
          break;
        }
        vals[i] = 0;
      }
      if (free_cells.empty()) break;
    }
  }
  return out;
}

}  // namespace tgmod

#endif  // TGMOD_ENUMERATE_HPP
