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

#ifndef TGMOD_SIMPLICIAL_HPP
#define TGMOD_SIMPLICIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "tgmod/construct.hpp"
#include "tgmod/core.hpp"
#include "tgmod/exactness.hpp"
#include "tgmod/sset.hpp"

namespace tgmod {

// ---------------------------------------------------------------------------
// Truncated simplicial modules
// ---------------------------------------------------------------------------

/// A truncated simplicial object in the module category: levels X_0..X_trunc
/// with face maps d_i: X_n -> X_{n-1} and degeneracies s_i: X_n -> X_{n+1}.
struct SimplicialModule {
  std::string name;
  std::size_t trunc = 0;
  std::vector<ModulePtr> levels;
  std::vector<std::vector<ModuleMorphism>> faces;   ///< faces[n][i], n >= 1
  std::vector<std::vector<ModuleMorphism>> degens;  ///< degens[n][i], n < trunc

  const ModuleMorphism& d(std::size_t n, std::size_t i) const { return faces[n][i]; }
  const ModuleMorphism& s(std::size_t n, std::size_t i) const { return degens[n][i]; }

  void validate_shape() const {
    if (levels.size() != trunc + 1)
      throw StructuralError("simplicial '" + name + "': level count mismatch");
    if (faces.size() != trunc + 1 || degens.size() != trunc + 1)
      throw StructuralError("simplicial '" + name + "': map table shape mismatch");
    for (std::size_t n = 1; n <= trunc; ++n) {
      if (faces[n].size() != n + 1)
        throw StructuralError("simplicial '" + name + "': face arity at level " +
                              std::to_string(n));
      for (std::size_t i = 0; i <= n; ++i) {
        faces[n][i].validate_shape();
        if (!(*faces[n][i].source == *levels[n]) ||
            !(*faces[n][i].target == *levels[n - 1]))
          throw StructuralError("simplicial '" + name + "': face endpoints");
      }
    }
    for (std::size_t n = 0; n < trunc; ++n) {
      if (degens[n].size() != n + 1)
        throw StructuralError("simplicial '" + name + "': degeneracy arity");
      for (std::size_t i = 0; i <= n; ++i) {
        degens[n][i].validate_shape();
        if (!(*degens[n][i].source == *levels[n]) ||
            !(*degens[n][i].target == *levels[n + 1]))
          throw StructuralError("simplicial '" + name + "': degeneracy endpoints");
      }
    }
  }
};

using SModulePtr = std::shared_ptr<const SimplicialModule>;

/// All simplicial identities that are expressible within the truncation,
/// plus morphism axioms for every face and degeneracy. Witness layout for
/// identity checks: [n, i, j, x].
inline AxiomReport check_simplicial(const SimplicialModule& x, unsigned workers = 1) {
  x.validate_shape();
  AxiomReport rep;
  rep.subject = x.name;
  for (std::size_t n = 1; n <= x.trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      rep.absorb(check_morphism(x.faces[n][i], workers),
                 "d" + std::to_string(n) + "_" + std::to_string(i) + "/");
  for (std::size_t n = 0; n < x.trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      rep.absorb(check_morphism(x.degens[n][i], workers),
                 "s" + std::to_string(n) + "_" + std::to_string(i) + "/");

  // d_i d_j = d_{j-1} d_i for i < j
  for (std::size_t n = 2; n <= x.trunc; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        bool ok = true;
        std::size_t bad = 0;
        for (Elem v = 0; v < x.levels[n]->size() && ok; ++v)
          if (x.d(n - 1, i).table[x.d(n, j).table[v]] !=
              x.d(n - 1, j - 1).table[x.d(n, i).table[v]]) {
            ok = false;
            bad = v;
          }
        if (ok)
          rep.add(pass_check("face-face"));
        else
          rep.add(fail_check("face-face", {n, i, j, bad}));
      }

  // s_i s_j = s_{j+1} s_i for i <= j
  for (std::size_t n = 0; n + 2 <= x.trunc; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i) {
        bool ok = true;
        std::size_t bad = 0;
        for (Elem v = 0; v < x.levels[n]->size() && ok; ++v)
          if (x.s(n + 1, i).table[x.s(n, j).table[v]] !=
              x.s(n + 1, j + 1).table[x.s(n, i).table[v]]) {
            ok = false;
            bad = v;
          }
        if (ok)
          rep.add(pass_check("degen-degen"));
        else
          rep.add(fail_check("degen-degen", {n, i, j, bad}));
      }

  // d_i s_j relations on X_n for n < trunc
  for (std::size_t n = 0; n < x.trunc; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        bool ok = true;
        std::size_t bad = 0;
        for (Elem v = 0; v < x.levels[n]->size() && ok; ++v) {
          Elem lhs = x.d(n + 1, i).table[x.s(n, j).table[v]];
          Elem rhs;
          if (i == j || i == j + 1) {
            rhs = v;
          } else if (i < j) {
            rhs = x.s(n - 1, j - 1).table[x.d(n, i).table[v]];
          } else {  // i > j + 1
            rhs = x.s(n - 1, j).table[x.d(n, i - 1).table[v]];
          }
          if (lhs != rhs) {
            ok = false;
            bad = v;
          }
        }
        if (ok)
          rep.add(pass_check("face-degen"));
        else
          rep.add(fail_check("face-degen", {n, i, j, bad}));
      }
  return rep;
}

/// Constant simplicial object: every level is m, every map the identity.
inline SModulePtr constant_object(const ModulePtr& m, std::size_t trunc) {
  auto x = std::make_shared<SimplicialModule>();
  x->name = "const(" + m->name + ")";
  x->trunc = trunc;
  x->levels.assign(trunc + 1, m);
  x->faces.resize(trunc + 1);
  x->degens.resize(trunc + 1);
  for (std::size_t n = 1; n <= trunc; ++n)
    x->faces[n].assign(n + 1, identity_morphism(m));
  for (std::size_t n = 0; n < trunc; ++n)
    x->degens[n].assign(n + 1, identity_morphism(m));
  return x;
}

/// The point object: constant at the zero module.
inline SModulePtr point_object(const SemiringPtr& s, std::size_t trunc) {
  return constant_object(zero_module(s, "0"), trunc);
}

// ---------------------------------------------------------------------------
// Simplicial morphisms
// ---------------------------------------------------------------------------

struct SimplicialMorphism {
  SModulePtr source, target;
  std::vector<ModuleMorphism> levels;

  const ModuleMorphism& at(std::size_t n) const { return levels[n]; }
};

inline AxiomReport check_simplicial_morphism(const SimplicialMorphism& f,
                                             unsigned workers = 1) {
  AxiomReport rep;
  rep.subject = "simplicial-morphism";
  if (!f.source || !f.target || f.levels.size() != f.source->trunc + 1 ||
      f.source->trunc != f.target->trunc)
    throw StructuralError("simplicial morphism: level count mismatch");
  for (std::size_t n = 0; n <= f.source->trunc; ++n)
    rep.absorb(check_morphism(f.levels[n], workers), "f" + std::to_string(n) + "/");
  for (std::size_t n = 1; n <= f.source->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      bool ok = true;
      std::size_t bad = 0;
      for (Elem v = 0; v < f.source->levels[n]->size() && ok; ++v)
        if (f.levels[n - 1].table[f.source->d(n, i).table[v]] !=
            f.target->d(n, i).table[f.levels[n].table[v]]) {
          ok = false;
          bad = v;
        }
      rep.add(ok ? pass_check("commutes-with-face")
                 : fail_check("commutes-with-face", {n, i, bad}));
    }
  for (std::size_t n = 0; n < f.source->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      bool ok = true;
      std::size_t bad = 0;
      for (Elem v = 0; v < f.source->levels[n]->size() && ok; ++v)
        if (f.levels[n + 1].table[f.source->s(n, i).table[v]] !=
            f.target->s(n, i).table[f.levels[n].table[v]]) {
          ok = false;
          bad = v;
        }
      rep.add(ok ? pass_check("commutes-with-degeneracy")
                 : fail_check("commutes-with-degeneracy", {n, i, bad}));
    }
  return rep;
}

inline SimplicialMorphism identity_smorphism(const SModulePtr& x) {
  SimplicialMorphism f;
  f.source = f.target = x;
  for (std::size_t n = 0; n <= x->trunc; ++n)
    f.levels.push_back(identity_morphism(x->levels[n]));
  return f;
}

inline SimplicialMorphism zero_smorphism(const SModulePtr& x, const SModulePtr& y) {
  SimplicialMorphism f;
  f.source = x;
  f.target = y;
  for (std::size_t n = 0; n <= x->trunc; ++n)
    f.levels.push_back(zero_morphism(x->levels[n], y->levels[n]));
  return f;
}

/// Promotes a module morphism to a morphism of constant objects.
inline SimplicialMorphism constant_smorphism(const ModuleMorphism& f,
                                             std::size_t trunc) {
  SimplicialMorphism out;
  out.source = constant_object(f.source, trunc);
  out.target = constant_object(f.target, trunc);
  out.levels.assign(trunc + 1, f);
  return out;
}

inline SimplicialMorphism compose(const SimplicialMorphism& g,
                                  const SimplicialMorphism& f) {
  SimplicialMorphism h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t n = 0; n < f.levels.size(); ++n)
    h.levels.push_back(compose(g.levels[n], f.levels[n]));
  return h;
}

/// Levelwise product with componentwise structure maps.
struct SProductResult {
  SModulePtr object;
  SimplicialMorphism proj0, proj1;
};

inline SProductResult simplicial_product(const SModulePtr& a, const SModulePtr& b,
                                         const WorkbenchConfig& cfg = {}) {
  if (a->trunc != b->trunc) throw StructuralError("simplicial_product: truncations");
  auto x = std::make_shared<SimplicialModule>();
  x->name = "(" + a->name + "x" + b->name + ")";
  x->trunc = a->trunc;
  std::vector<ProductResult> prods;
  for (std::size_t n = 0; n <= a->trunc; ++n) {
    prods.push_back(product_module(a->levels[n], b->levels[n], cfg));
    x->levels.push_back(prods[n].module);
  }
  x->faces.resize(a->trunc + 1);
  x->degens.resize(a->trunc + 1);
  for (std::size_t n = 1; n <= a->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x->faces[n].push_back(pair_morphism(compose(a->d(n, i), prods[n].proj0),
                                          compose(b->d(n, i), prods[n].proj1),
                                          prods[n - 1]));
  for (std::size_t n = 0; n < a->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x->degens[n].push_back(pair_morphism(compose(a->s(n, i), prods[n].proj0),
                                           compose(b->s(n, i), prods[n].proj1),
                                           prods[n + 1]));
  SProductResult out;
  out.object = x;
  out.proj0.source = x;
  out.proj0.target = a;
  out.proj1.source = x;
  out.proj1.target = b;
  for (std::size_t n = 0; n <= a->trunc; ++n) {
    out.proj0.levels.push_back(prods[n].proj0);
    out.proj1.levels.push_back(prods[n].proj1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensoring with a finite simplicial set
// ---------------------------------------------------------------------------

namespace detail {

/// Digit of a base-|X| tuple encoding; copy 0 is the most significant digit.
inline Elem tuple_digit(std::size_t value, std::size_t copy, std::size_t copies,
                        std::size_t base) {
  std::size_t shift = copies - 1 - copy;
  for (std::size_t i = 0; i < shift; ++i) value /= base;
  return static_cast<Elem>(value % base);
}

}  // namespace detail

/// |X|^copies with componentwise operations; element = base-|X| digit tuple,
/// copy 0 the most significant digit.
inline ModulePtr power_module(const ModulePtr& x, std::size_t copies,
                              const WorkbenchConfig& cfg, const std::string& name) {
  double szd = detail::pow_size(x->size(), copies);
  if (szd > static_cast<double>(cfg.element_budget))
    throw BudgetError("power_module: " + std::to_string(x->size()) + "^" +
                      std::to_string(copies) + " exceeds element budget");
  const std::size_t base = x->size();
  std::size_t sz = 1;
  for (std::size_t c = 0; c < copies; ++c) sz *= base;

  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = name;
  mod->semiring = x->semiring;
  mod->carrier.size = sz;
  std::size_t zero = 0;
  for (std::size_t c = 0; c < copies; ++c) zero = zero * base + x->zero();
  mod->carrier.zero = static_cast<Elem>(zero);
  mod->carrier.add_table.resize(sz * sz);
  for (std::size_t u = 0; u < sz; ++u)
    for (std::size_t v = 0; v < sz; ++v) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < copies; ++c)
        w = w * base + x->add(detail::tuple_digit(u, c, copies, base),
                              detail::tuple_digit(v, c, copies, base));
      mod->carrier.add_table[u * sz + v] = static_cast<Elem>(w);
    }
  const auto scalars = scalar_tuples(*x->semiring);
  const TernaryGammaSemiring& sr = *x->semiring;
  const std::size_t t = sr.tsize(), g = sr.gamma_size;
  mod->action_table.resize(t * g * sz * g * t);
  for (const auto& sc : scalars)
    for (std::size_t u = 0; u < sz; ++u) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < copies; ++c)
        w = w * base +
            x->act(sc.t1, sc.al, detail::tuple_digit(u, c, copies, base), sc.be, sc.t2);
      const std::size_t idx = (((sc.t1 * g + sc.al) * sz + u) * g + sc.be) * t + sc.t2;
      mod->action_table[idx] = static_cast<Elem>(w);
    }
  return mod;
}

/// The coproduct-sum morphism between power modules: target copy t collects
/// the per-copy images of every source copy s with copy_map(s) = t.
inline ModuleMorphism copy_sum_morphism(const ModulePtr& src, std::size_t src_copies,
                                        const ModulePtr& dst, std::size_t dst_copies,
                                        const ModuleMorphism& component,
                                        const std::vector<std::size_t>& copy_map) {
  const std::size_t sbase = component.source->size();
  const std::size_t dbase = component.target->size();
  ModuleMorphism f;
  f.source = src;
  f.target = dst;
  f.table.resize(src->size());
  for (std::size_t u = 0; u < src->size(); ++u) {
    std::vector<Elem> acc(dst_copies, component.target->zero());
    for (std::size_t c = 0; c < src_copies; ++c) {
      Elem digit = detail::tuple_digit(u, c, src_copies, sbase);
      Elem img = component.table[digit];
      acc[copy_map[c]] = component.target->add(acc[copy_map[c]], img);
    }
    std::size_t w = 0;
    for (std::size_t c = 0; c < dst_copies; ++c) w = w * dbase + acc[c];
    f.table[u] = static_cast<Elem>(w);
  }
  return f;
}

/// Level n of the result is one copy of X_n per n-simplex of K (the finite
/// coproduct, i.e. the direct power with componentwise action); faces and
/// degeneracies are induced by K's.
struct DSumResult {
  SModulePtr object;
  SimplicialSet sset;
};

inline DSumResult tensor_with_simplicial_set(const SModulePtr& x,
                                             const SimplicialSet& k,
                                             const WorkbenchConfig& cfg = {}) {
  if (k.trunc != x->trunc)
    throw StructuralError("tensor_with_simplicial_set: truncation mismatch");
  auto obj = std::make_shared<SimplicialModule>();
  obj->name = x->name + "(x)" + k.name;
  obj->trunc = x->trunc;
  for (std::size_t n = 0; n <= x->trunc; ++n)
    obj->levels.push_back(power_module(
        x->levels[n], k.level_sizes[n], cfg,
        obj->name + "_" + std::to_string(n)));
  obj->faces.resize(x->trunc + 1);
  obj->degens.resize(x->trunc + 1);
  for (std::size_t n = 1; n <= x->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->faces[n].push_back(copy_sum_morphism(
          obj->levels[n], k.level_sizes[n], obj->levels[n - 1],
          k.level_sizes[n - 1], x->d(n, i), k.faces[n][i]));
  for (std::size_t n = 0; n < x->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->degens[n].push_back(copy_sum_morphism(
          obj->levels[n], k.level_sizes[n], obj->levels[n + 1],
          k.level_sizes[n + 1], x->s(n, i), k.degens[n][i]));
  DSumResult out;
  out.object = obj;
  out.sset = k;
  return out;
}

/// Inclusion of X at the degenerate tower over a vertex of K.
inline SimplicialMorphism vertex_inclusion(const SModulePtr& x, const DSumResult& d,
                                           std::size_t vertex) {
  SimplicialMorphism f;
  f.source = x;
  f.target = d.object;
  std::size_t copy = vertex;
  for (std::size_t n = 0; n <= x->trunc; ++n) {
    const std::size_t copies = d.sset.level_sizes[n];
    const std::size_t base = x->levels[n]->size();
    ModuleMorphism lvl;
    lvl.source = x->levels[n];
    lvl.target = d.object->levels[n];
    lvl.table.resize(base);
    for (Elem v = 0; v < base; ++v) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < copies; ++c)
        w = w * base + (c == copy ? v : x->levels[n]->zero());
      lvl.table[v] = static_cast<Elem>(w);
    }
    f.levels.push_back(std::move(lvl));
    if (n < x->trunc) copy = d.sset.degens[n][0][copy];
  }
  return f;
}

/// The fold X (x) K -> X summing all copies (induced by K -> Delta[0]).
inline SimplicialMorphism fold_morphism(const SModulePtr& x, const DSumResult& d) {
  SimplicialMorphism f;
  f.source = d.object;
  f.target = x;
  for (std::size_t n = 0; n <= x->trunc; ++n) {
    const std::size_t copies = d.sset.level_sizes[n];
    std::vector<std::size_t> to_zero(copies, 0);
    ModuleMorphism lvl = copy_sum_morphism(d.object->levels[n], copies,
                                           x->levels[n], 1,
                                           identity_morphism(x->levels[n]), to_zero);
    lvl.target = x->levels[n];
    f.levels.push_back(std::move(lvl));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Levelwise quotients
// ---------------------------------------------------------------------------

struct SQuotientResult {
  SModulePtr object;
  SimplicialMorphism projection;
};

/// Quotients every level by its congruence and re-derives faces/degeneracies
/// on representatives, verifying well-definedness over all block members.
inline SQuotientResult simplicial_quotient(const SModulePtr& x,
                                           const std::vector<Congruence>& cs,
                                           const std::string& name) {
  if (cs.size() != x->trunc + 1)
    throw StructuralError("simplicial_quotient: congruence count mismatch");
  std::vector<QuotientResult> qs;
  for (std::size_t n = 0; n <= x->trunc; ++n)
    qs.push_back(quotient(x->levels[n], cs[n], name + "_" + std::to_string(n)));

  auto induce = [&](const ModuleMorphism& f, std::size_t nsrc, std::size_t ndst) {
    ModuleMorphism g;
    g.source = qs[nsrc].module;
    g.target = qs[ndst].module;
    g.table.resize(qs[nsrc].module->size());
    for (std::size_t b = 0; b < cs[nsrc].block_count(); ++b)
      g.table[b] = cs[ndst].block_of[f.table[cs[nsrc].blocks[b].front()]];
    for (Elem v = 0; v < x->levels[nsrc]->size(); ++v)
      if (g.table[cs[nsrc].block_of[v]] != cs[ndst].block_of[f.table[v]])
        throw StructuralError("simplicial_quotient: induced map ill-defined; the "
                              "level congruences are not simplicially compatible");
    return g;
  };

  auto obj = std::make_shared<SimplicialModule>();
  obj->name = name;
  obj->trunc = x->trunc;
  for (auto& q : qs) obj->levels.push_back(q.module);
  obj->faces.resize(x->trunc + 1);
  obj->degens.resize(x->trunc + 1);
  for (std::size_t n = 1; n <= x->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->faces[n].push_back(induce(x->d(n, i), n, n - 1));
  for (std::size_t n = 0; n < x->trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      obj->degens[n].push_back(induce(x->s(n, i), n, n + 1));

  SQuotientResult out;
  out.object = obj;
  out.projection.source = x;
  out.projection.target = obj;
  for (std::size_t n = 0; n <= x->trunc; ++n) {
    ModuleMorphism p = qs[n].projection;
    p.target = obj->levels[n];
    out.projection.levels.push_back(std::move(p));
  }
  return out;
}

}  // namespace tgmod

#endif  // TGMOD_SIMPLICIAL_HPP
