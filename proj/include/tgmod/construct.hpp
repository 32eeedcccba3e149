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

#ifndef TGMOD_CONSTRUCT_HPP
#define TGMOD_CONSTRUCT_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgmod/core.hpp"

namespace tgmod {

/// The one-element module over a semiring.
inline ModulePtr zero_module(const SemiringPtr& s, const std::string& name) {
  auto m = std::make_shared<TernaryGammaModule>();
  m->name = name;
  m->semiring = s;
  m->carrier.size = 1;
  m->carrier.zero = 0;
  m->carrier.add_table = {0};
  m->action_table.assign(s->tsize() * s->gamma_size * s->gamma_size * s->tsize(), 0);
  return m;
}

// ---------------------------------------------------------------------------
// Products and coproducts
// ---------------------------------------------------------------------------

struct ProductResult {
  ModulePtr module;
  ModuleMorphism proj0, proj1;
};

/// Binary product: pairs with componentwise tables. Pair (a, b) is encoded as
/// a * |B| + b. In this semiadditive setting the same carrier also serves as
/// the coproduct; see coproduct_module.
inline ProductResult product_module(const ModulePtr& a, const ModulePtr& b,
                                    const WorkbenchConfig& cfg = {}) {
  if (!same_semiring(*a, *b))
    throw StructuralError("product_module: different semirings");
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  if (n > cfg.element_budget)
    throw BudgetError("product_module: carrier size " + std::to_string(n) +
                      " exceeds element budget " + std::to_string(cfg.element_budget));
  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = a->name + "x" + b->name;
  mod->semiring = a->semiring;
  mod->carrier.size = n;
  mod->carrier.zero = a->zero() * nb + b->zero();
  mod->carrier.add_table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
      Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      mod->carrier.add_table[x * n + y] =
          a->add(xa, ya) * static_cast<Elem>(nb) + b->add(xb, yb);
    }
  const TernaryGammaSemiring& s = *a->semiring;
  const std::size_t t = s.tsize(), g = s.gamma_size;
  mod->action_table.resize(t * g * n * g * t);
  std::size_t idx = 0;
  for (Elem t1 = 0; t1 < t; ++t1)
    for (GIdx al = 0; al < g; ++al)
      for (std::size_t m = 0; m < n; ++m)
        for (GIdx be = 0; be < g; ++be)
          for (Elem t2 = 0; t2 < t; ++t2) {
            Elem ma = static_cast<Elem>(m / nb), mb = static_cast<Elem>(m % nb);
            mod->action_table[idx++] =
                a->act(t1, al, ma, be, t2) * static_cast<Elem>(nb) +
                b->act(t1, al, mb, be, t2);
          }
  ProductResult out;
  out.module = mod;
  out.proj0.source = mod;
  out.proj0.target = a;
  out.proj0.table.resize(n);
  out.proj1.source = mod;
  out.proj1.target = b;
  out.proj1.table.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.proj0.table[x] = static_cast<Elem>(x / nb);
    out.proj1.table[x] = static_cast<Elem>(x % nb);
  }
  out.module = mod;
  return out;
}

/// The mediating morphism <f, g> : X -> A x B of the product.
inline ModuleMorphism pair_morphism(const ModuleMorphism& f, const ModuleMorphism& g,
                                    const ProductResult& prod) {
  if (!(*f.source == *g.source)) throw StructuralError("pair_morphism: sources differ");
  ModuleMorphism h;
  h.source = f.source;
  h.target = prod.module;
  const std::size_t nb = prod.proj1.target->size();
  h.table.resize(f.table.size());
  for (std::size_t x = 0; x < f.table.size(); ++x)
    h.table[x] = f.table[x] * static_cast<Elem>(nb) + g.table[x];
  return h;
}

struct CoproductResult {
  ModulePtr module;
  ModuleMorphism inj0, inj1;
};

/// Finite products and coproducts coincide for commutative monoids, and the
/// componentwise action keeps that true here (the injections are morphisms
/// thanks to strict zero-absorption). Carrier and tables match product_module.
inline CoproductResult coproduct_module(const ModulePtr& a, const ModulePtr& b,
                                        const WorkbenchConfig& cfg = {}) {
  ProductResult p = product_module(a, b, cfg);
  CoproductResult out;
  out.module = p.module;
  const std::size_t nb = b->size();
  out.inj0.source = a;
  out.inj0.target = p.module;
  out.inj0.table.resize(a->size());
  for (Elem x = 0; x < a->size(); ++x)
    out.inj0.table[x] = x * static_cast<Elem>(nb) + b->zero();
  out.inj1.source = b;
  out.inj1.target = p.module;
  out.inj1.table.resize(b->size());
  for (Elem x = 0; x < b->size(); ++x)
    out.inj1.table[x] = a->zero() * static_cast<Elem>(nb) + x;
  return out;
}

/// The mediating morphism [f, g] : A (+) B -> Q of the coproduct,
/// (a, b) |-> f(a) + g(b).
inline ModuleMorphism copair_morphism(const ModuleMorphism& f,
                                      const ModuleMorphism& g,
                                      const CoproductResult& cop) {
  if (!(*f.target == *g.target)) throw StructuralError("copair_morphism: targets differ");
  ModuleMorphism h;
  h.source = cop.module;
  h.target = f.target;
  const std::size_t nb = g.source->size();
  h.table.resize(cop.module->size());
  for (std::size_t x = 0; x < h.table.size(); ++x) {
    Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    h.table[x] = f.target->add(f.table[xa], g.table[xb]);
  }
  return h;
}

/// Finite product of a list of modules over one semiring. Elements are
/// mixed-radix tuples, factor 0 most significant; projections included.
/// The empty product is the zero module.
struct FiniteProductResult {
  ModulePtr module;
  std::vector<ModuleMorphism> projections;
  std::vector<std::size_t> radix;  ///< factor sizes
};

inline FiniteProductResult finite_product(const SemiringPtr& s,
                                          const std::vector<ModulePtr>& factors,
                                          const WorkbenchConfig& cfg = {}) {
  FiniteProductResult out;
  double szd = 1;
  for (const auto& f : factors) szd *= static_cast<double>(f->size());
  if (szd > static_cast<double>(cfg.element_budget))
    throw BudgetError("finite_product: carrier exceeds element budget");
  std::size_t sz = 1;
  for (const auto& f : factors) {
    out.radix.push_back(f->size());
    sz *= f->size();
  }
  auto digit = [&](std::size_t value, std::size_t k) {
    for (std::size_t i = factors.size(); i-- > k + 1;) value /= out.radix[i];
    return static_cast<Elem>(value % out.radix[k]);
  };
  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = "prod";
  mod->semiring = s;
  mod->carrier.size = sz;
  std::size_t zero = 0;
  for (const auto& f : factors) zero = zero * f->size() + f->zero();
  mod->carrier.zero = static_cast<Elem>(zero);
  mod->carrier.add_table.resize(sz * sz);
  for (std::size_t u = 0; u < sz; ++u)
    for (std::size_t v = 0; v < sz; ++v) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < factors.size(); ++k)
        w = w * out.radix[k] + factors[k]->add(digit(u, k), digit(v, k));
      mod->carrier.add_table[u * sz + v] = static_cast<Elem>(w);
    }
  const auto scalars = scalar_tuples(*s);
  const std::size_t t = s->tsize(), g = s->gamma_size;
  mod->action_table.resize(t * g * sz * g * t);
  for (const auto& sc : scalars)
    for (std::size_t u = 0; u < sz; ++u) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < factors.size(); ++k)
        w = w * out.radix[k] +
            factors[k]->act(sc.t1, sc.al, digit(u, k), sc.be, sc.t2);
      const std::size_t idx = (((sc.t1 * g + sc.al) * sz + u) * g + sc.be) * t + sc.t2;
      mod->action_table[idx] = static_cast<Elem>(w);
    }
  out.module = mod;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    ModuleMorphism p;
    p.source = mod;
    p.target = factors[k];
    p.table.resize(sz);
    for (std::size_t u = 0; u < sz; ++u) p.table[u] = digit(u, k);
    out.projections.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

struct SubmoduleResult {
  ModulePtr module;
  ModuleMorphism inclusion;
  std::vector<Elem> elements;  ///< sub index -> parent element, sorted
};

/// Least subset containing `seed` and zero, closed under add and under the
/// action in the M-slot.
inline std::vector<Elem> submodule_closure(const TernaryGammaModule& m,
                                           const std::vector<Elem>& seed) {
  std::vector<bool> in(m.size(), false);
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (x >= m.size()) throw StructuralError("submodule_closure: seed out of range");
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(m.zero());
  for (Elem x : seed) push(x);
  const auto scalars = scalar_tuples(*m.semiring);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (std::size_t qj = 0; qj <= qi; ++qj) {
      push(m.add(x, queue[qj]));
      push(m.add(queue[qj], x));
    }
    for (const auto& sc : scalars) push(m.act(sc.t1, sc.al, x, sc.be, sc.t2));
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// Builds the module structure on an already-closed subset (sorted, with
/// zero). Throws StructuralError if the subset is not closed.
inline SubmoduleResult submodule_from_subset(const ModulePtr& m,
                                             std::vector<Elem> subset,
                                             const std::string& name = {}) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<Elem> pos(m->size(), static_cast<Elem>(m->size()));
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<Elem>(i);
  auto look = [&](Elem parent) -> Elem {
    if (parent >= m->size() || pos[parent] == static_cast<Elem>(m->size()))
      throw StructuralError("submodule_from_subset: subset not closed");
    return pos[parent];
  };
  if (pos[m->zero()] == static_cast<Elem>(m->size()))
    throw StructuralError("submodule_from_subset: zero missing");

  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = name.empty() ? ("sub(" + m->name + ")") : name;
  mod->semiring = m->semiring;
  const std::size_t k = subset.size();
  mod->carrier.size = k;
  mod->carrier.zero = pos[m->zero()];
  mod->carrier.add_table.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      mod->carrier.add_table[i * k + j] = look(m->add(subset[i], subset[j]));
  const TernaryGammaSemiring& s = *m->semiring;
  const std::size_t t = s.tsize(), g = s.gamma_size;
  mod->action_table.resize(t * g * k * g * t);
  std::size_t idx = 0;
  for (Elem t1 = 0; t1 < t; ++t1)
    for (GIdx al = 0; al < g; ++al)
      for (std::size_t i = 0; i < k; ++i)
        for (GIdx be = 0; be < g; ++be)
          for (Elem t2 = 0; t2 < t; ++t2)
            mod->action_table[idx++] = look(m->act(t1, al, subset[i], be, t2));

  SubmoduleResult out;
  out.module = mod;
  out.elements = subset;
  out.inclusion.source = mod;
  out.inclusion.target = m;
  out.inclusion.table = subset;
  return out;
}

inline SubmoduleResult submodule_generated(const ModulePtr& m,
                                           const std::vector<Elem>& seed,
                                           const std::string& name = {}) {
  return submodule_from_subset(m, submodule_closure(*m, seed), name);
}

/// Restricts f to a submodule of its source, landing in a submodule of its
/// target. Throws if some image escapes the target subset.
inline ModuleMorphism restrict_morphism(const ModuleMorphism& f,
                                        const SubmoduleResult& src,
                                        const SubmoduleResult& dst) {
  std::vector<Elem> pos(f.target->size(), static_cast<Elem>(f.target->size()));
  for (std::size_t i = 0; i < dst.elements.size(); ++i)
    pos[dst.elements[i]] = static_cast<Elem>(i);
  ModuleMorphism out;
  out.source = src.module;
  out.target = dst.module;
  out.table.resize(src.elements.size());
  for (std::size_t i = 0; i < src.elements.size(); ++i) {
    Elem img = f.table[src.elements[i]];
    if (pos[img] == static_cast<Elem>(f.target->size()))
      throw StructuralError("restrict_morphism: image leaves the target submodule");
    out.table[i] = pos[img];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search and relabeling
// ---------------------------------------------------------------------------

/// Brute-force search for a module isomorphism (carrier bijection preserving
/// zero, add and action). Acceptable at corpus sizes.
inline std::optional<std::vector<Elem>> find_module_isomorphism(
    const TernaryGammaModule& a, const TernaryGammaModule& b) {
  if (a.size() != b.size() || !same_semiring(a, b)) return std::nullopt;
  const std::size_t n = a.size();
  const auto scalars = scalar_tuples(*a.semiring);
  std::vector<Elem> phi(n, static_cast<Elem>(n));
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      if ((x == a.zero()) != (y == b.zero())) continue;
      phi[x] = y;
      used[y] = true;
      bool ok = true;
      for (std::size_t u = 0; u <= x && ok; ++u) {
        if (phi[u] == static_cast<Elem>(n)) continue;
        Elem su = a.add(static_cast<Elem>(x), static_cast<Elem>(u));
        Elem su2 = a.add(static_cast<Elem>(u), static_cast<Elem>(x));
        if (su <= x && phi[su] != b.add(y, phi[u])) ok = false;
        if (ok && su2 <= x && phi[su2] != b.add(phi[u], y)) ok = false;
      }
      for (const auto& sc : scalars) {
        if (!ok) break;
        Elem ax = a.act(sc.t1, sc.al, static_cast<Elem>(x), sc.be, sc.t2);
        if (ax <= x && phi[ax] != b.act(sc.t1, sc.al, y, sc.be, sc.t2)) ok = false;
      }
      if (ok && go(x + 1)) return true;
      used[y] = false;
      phi[x] = static_cast<Elem>(n);
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  // full verification (the incremental pruning is partial)
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (phi[a.add(x, y)] != b.add(phi[x], phi[y])) return std::nullopt;
  for (const auto& sc : scalars)
    for (Elem x = 0; x < n; ++x)
      if (phi[a.act(sc.t1, sc.al, x, sc.be, sc.t2)] !=
          b.act(sc.t1, sc.al, phi[x], sc.be, sc.t2))
        return std::nullopt;
  return phi;
}

/// Semiring isomorphism: carrier bijection preserving add, zero and ternary,
/// combined with a Gamma relabeling.
inline bool semirings_isomorphic(const TernaryGammaSemiring& a,
                                 const TernaryGammaSemiring& b) {
  if (a.tsize() != b.tsize() || a.gamma_size != b.gamma_size) return false;
  const std::size_t n = a.tsize(), g = a.gamma_size;
  std::vector<Elem> phi(n);
  for (Elem i = 0; i < n; ++i) phi[i] = i;
  std::vector<GIdx> rho(g);
  for (GIdx i = 0; i < g; ++i) rho[i] = i;

  std::sort(phi.begin(), phi.end());
  do {
    if (phi[a.carrier.zero] != b.carrier.zero) continue;
    bool add_ok = true;
    for (Elem x = 0; x < n && add_ok; ++x)
      for (Elem y = 0; y < n && add_ok; ++y)
        if (phi[a.carrier.add(x, y)] != b.carrier.add(phi[x], phi[y])) add_ok = false;
    if (!add_ok) continue;
    std::sort(rho.begin(), rho.end());
    do {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x)
        for (GIdx al = 0; al < g && ok; ++al)
          for (Elem y = 0; y < n && ok; ++y)
            for (GIdx be = 0; be < g && ok; ++be)
              for (Elem z = 0; z < n && ok; ++z)
                if (phi[a.ternary(x, al, y, be, z)] !=
                    b.ternary(phi[x], rho[al], phi[y], rho[be], phi[z]))
                  ok = false;
      if (ok) return true;
    } while (std::next_permutation(rho.begin(), rho.end()));
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

/// Relabels a module carrier by a bijection (new index = phi[old index]).
/// Used by the checker-invariance property tests.
inline TernaryGammaModule relabel_module(const TernaryGammaModule& m,
                                         const std::vector<Elem>& phi) {
  const std::size_t n = m.size();
  TernaryGammaModule out;
  out.name = m.name + "'";
  out.semiring = m.semiring;
  out.carrier.size = n;
  out.carrier.zero = phi[m.zero()];
  out.carrier.add_table.resize(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      out.carrier.add_table[phi[x] * n + phi[y]] = phi[m.add(x, y)];
  const TernaryGammaSemiring& s = *m.semiring;
  const std::size_t t = s.tsize(), g = s.gamma_size;
  out.action_table.resize(t * g * n * g * t);
  for (Elem t1 = 0; t1 < t; ++t1)
    for (GIdx al = 0; al < g; ++al)
      for (Elem mm = 0; mm < n; ++mm)
        for (GIdx be = 0; be < g; ++be)
          for (Elem t2 = 0; t2 < t; ++t2) {
            const std::size_t idx = (((t1 * g + al) * n + phi[mm]) * g + be) * t + t2;
            out.action_table[idx] = phi[m.act(t1, al, mm, be, t2)];
          }
  return out;
}

}  // namespace tgmod

#endif  // TGMOD_CONSTRUCT_HPP
