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

#ifndef TGMOD_MONOIDAL_HPP
#define TGMOD_MONOIDAL_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgmod/construct.hpp"
#include "tgmod/core.hpp"
#include "tgmod/enumerate.hpp"

namespace tgmod {

/// Every element has an additive inverse. This is the regime where
/// alternating-sum homological algebra applies.
inline bool group_complete(const FiniteCommutativeMonoid& m) {
  for (Elem x = 0; x < m.size; ++x) {
    bool has = false;
    for (Elem y = 0; y < m.size && !has; ++y)
      if (m.add(x, y) == m.zero) has = true;
    if (!has) return false;
  }
  return true;
}

/// Negation table for a group-complete monoid (inverses in a commutative
/// monoid are unique when they exist).
inline std::vector<Elem> negation_table(const FiniteCommutativeMonoid& m) {
  std::vector<Elem> neg(m.size, m.size);
  for (Elem x = 0; x < m.size; ++x)
    for (Elem y = 0; y < m.size; ++y)
      if (m.add(x, y) == m.zero) neg[x] = y;
  for (Elem x = 0; x < m.size; ++x)
    if (neg[x] == m.size)
      throw StructuralError("negation_table: monoid is not group-complete");
  return neg;
}

// ---------------------------------------------------------------------------
// Multilinear maps
// ---------------------------------------------------------------------------

/// A Gamma-balanced bi-additive map M x N -> P that kills zero in each slot.
struct MultilinearMap {
  ModulePtr left, right, target;
  std::vector<Elem> table;  ///< |M| * |N|, row-major

  Elem at(Elem x, Elem y) const { return table[x * right->size() + y]; }
};

inline AxiomReport check_multilinear(const MultilinearMap& f) {
  AxiomReport rep;
  rep.subject = "multilinear";
  const TernaryGammaModule& M = *f.left;
  const TernaryGammaModule& N = *f.right;
  const TernaryGammaModule& P = *f.target;
  if (f.table.size() != M.size() * N.size())
    throw StructuralError("multilinear: table size mismatch");

  bool zero_ok = true;
  std::vector<std::size_t> zero_wit;
  for (Elem y = 0; y < N.size() && zero_ok; ++y)
    if (f.at(M.zero(), y) != P.zero()) {
      zero_ok = false;
      zero_wit = {M.zero(), y};
    }
  for (Elem x = 0; x < M.size() && zero_ok; ++x)
    if (f.at(x, N.zero()) != P.zero()) {
      zero_ok = false;
      zero_wit = {x, N.zero()};
    }
  rep.add(zero_ok ? pass_check("multilinear-zero", CheckTier::Normalization)
                  : fail_check("multilinear-zero", zero_wit, CheckTier::Normalization));

  bool add_ok = true;
  std::vector<std::size_t> add_wit;
  for (Elem x = 0; x < M.size() && add_ok; ++x)
    for (Elem x2 = 0; x2 < M.size() && add_ok; ++x2)
      for (Elem y = 0; y < N.size() && add_ok; ++y)
        if (f.at(M.add(x, x2), y) != P.add(f.at(x, y), f.at(x2, y))) {
          add_ok = false;
          add_wit = {0, x, x2, y};
        }
  for (Elem x = 0; x < M.size() && add_ok; ++x)
    for (Elem y = 0; y < N.size() && add_ok; ++y)
      for (Elem y2 = 0; y2 < N.size() && add_ok; ++y2)
        if (f.at(x, N.add(y, y2)) != P.add(f.at(x, y), f.at(x, y2))) {
          add_ok = false;
          add_wit = {1, x, y, y2};
        }
  rep.add(add_ok ? pass_check("multilinear-additive")
                 : fail_check("multilinear-additive", add_wit));

  bool bal_ok = true;
  std::vector<std::size_t> bal_wit;
  for (const auto& sc : scalar_tuples(*M.semiring)) {
    if (!bal_ok) break;
    for (Elem x = 0; x < M.size() && bal_ok; ++x)
      for (Elem y = 0; y < N.size() && bal_ok; ++y) {
        Elem lhs = f.at(M.act(sc.t1, sc.al, x, sc.be, sc.t2), y);
        Elem mid = P.act(sc.t1, sc.al, f.at(x, y), sc.be, sc.t2);
        Elem rhs = f.at(x, N.act(sc.t1, sc.al, y, sc.be, sc.t2));
        if (lhs != mid || mid != rhs) {
          bal_ok = false;
          bal_wit = {sc.t1, sc.al, x, y, sc.be, sc.t2};
        }
      }
  }
  rep.add(bal_ok ? pass_check("multilinear-balanced")
                 : fail_check("multilinear-balanced", bal_wit));
  return rep;
}

/// Exactly the tables satisfying the MultilinearMap invariants, in lex table
/// order. Values on generator pairs are chosen and propagated through
/// additivity and balance; a final full check guards the propagation.
inline std::vector<MultilinearMap> enumerate_multilinear(const ModulePtr& m,
                                                         const ModulePtr& n,
                                                         const ModulePtr& p,
                                                         const WorkbenchConfig& cfg = {}) {
  if (!same_semiring(*m, *n) || !same_semiring(*m, *p))
    throw StructuralError("enumerate_multilinear: different semirings");
  const double naive = detail::pow_size(p->size(), m->size() * n->size());
  if (naive > static_cast<double>(cfg.search_budget))
    throw BudgetError("enumerate_multilinear: search space too large: |P|^(|M||N|) = " +
                      std::to_string(p->size()) + "^" +
                      std::to_string(m->size() * n->size()));

  const auto gens_m = module_generators(*m);
  const auto gens_n = module_generators(*n);
  const auto scalars = scalar_tuples(*m->semiring);
  const std::size_t nm = m->size(), nn = n->size();
  const Elem unset = static_cast<Elem>(p->size());

  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> choice(gens_m.size() * gens_n.size(), 0);
  bool more = true;
  while (more) {
    std::vector<Elem> f(nm * nn, unset);
    auto get = [&](Elem x, Elem y) -> Elem& { return f[x * nn + y]; };
    bool ok = true;
    for (Elem y = 0; y < nn; ++y) get(m->zero(), y) = p->zero();
    for (Elem x = 0; x < nm; ++x) get(x, n->zero()) = p->zero();
    for (std::size_t i = 0; i < gens_m.size() && ok; ++i)
      for (std::size_t j = 0; j < gens_n.size() && ok; ++j) {
        Elem& cell = get(gens_m[i], gens_n[j]);
        Elem v = choice[i * gens_n.size() + j];
        if (cell != unset && cell != v) ok = false;
        cell = v;
      }
    while (ok) {
      bool changed = false;
      auto assign = [&](Elem x, Elem y, Elem v) {
        Elem& cell = get(x, y);
        if (cell == unset) {
          cell = v;
          changed = true;
        } else if (cell != v) {
          ok = false;
        }
      };
      for (Elem x = 0; x < nm && ok; ++x)
        for (Elem y = 0; y < nn && ok; ++y) {
          if (get(x, y) == unset) continue;
          for (Elem x2 = 0; x2 <= x && ok; ++x2) {
            if (get(x2, y) == unset) continue;
            assign(m->add(x, x2), y, p->add(get(x, y), get(x2, y)));
          }
          for (Elem y2 = 0; y2 <= y && ok; ++y2) {
            if (get(x, y2) == unset) continue;
            assign(x, n->add(y, y2), p->add(get(x, y), get(x, y2)));
          }
          for (const auto& sc : scalars) {
            if (!ok) break;
            Elem v = p->act(sc.t1, sc.al, get(x, y), sc.be, sc.t2);
            assign(m->act(sc.t1, sc.al, x, sc.be, sc.t2), y, v);
            if (ok) assign(x, n->act(sc.t1, sc.al, y, sc.be, sc.t2), v);
          }
        }
      if (!changed) break;
    }
    if (ok)
      for (Elem c : f)
        if (c == unset) ok = false;
    if (ok) {
      MultilinearMap cand;
      cand.left = m;
      cand.right = n;
      cand.target = p;
      cand.table = f;
      if (check_multilinear(cand).passed()) tables.push_back(std::move(f));
    }
    more = false;
    for (std::size_t i = choice.size(); i-- > 0;) {
      if (++choice[i] < p->size()) {
        more = true;
        break;
      }
      choice[i] = 0;
    }
    if (choice.empty()) break;
  }

  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  std::vector<MultilinearMap> out;
  for (auto& t : tables) {
    MultilinearMap f;
    f.left = m;
    f.right = n;
    f.target = p;
    f.table = std::move(t);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor product by commutative-monoid completion
// ---------------------------------------------------------------------------

namespace detail {

/// Exponent vector over the pure-tensor generators.
using Vec = std::vector<std::uint32_t>;

inline std::size_t vec_degree(const Vec& v) {
  std::size_t d = 0;
  for (auto e : v) d += e;
  return d;
}

/// Degree-then-lex order; rules rewrite downwards in this order, which makes
/// normalization terminating.
inline bool vec_less(const Vec& a, const Vec& b) {
  std::size_t da = vec_degree(a), db = vec_degree(b);
  if (da != db) return da < db;
  return a < b;
}

inline bool vec_geq_componentwise(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

struct VecRule {
  Vec lhs, rhs;  // lhs > rhs in deglex
};

inline Vec vec_sub_add(const Vec& w, const Vec& l, const Vec& r) {
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] - l[i] + r[i];
  return out;
}

inline Vec normal_form(Vec v, const std::vector<VecRule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (vec_geq_componentwise(v, r.lhs)) {
        v = vec_sub_add(v, r.lhs, r.rhs);
        changed = true;
      }
    }
  }
  return v;
}

/// Knuth-Bendix style completion on exponent vectors: resolve all critical
/// pairs (componentwise maxima of left-hand sides) until confluence or
/// budget. Returns false when the budget ran out.
inline bool complete_rules(std::vector<VecRule>& rules, std::size_t budget) {
  auto add_rule = [&](Vec a, Vec b) -> bool {
    a = normal_form(std::move(a), rules);
    b = normal_form(std::move(b), rules);
    if (a == b) return false;
    VecRule r;
    if (vec_less(a, b)) {
      r.lhs = std::move(b);
      r.rhs = std::move(a);
    } else {
      r.lhs = std::move(a);
      r.rhs = std::move(b);
    }
    rules.push_back(std::move(r));
    return true;
  };

  std::size_t steps = 0;
  std::size_t checked_upto = 0;
  while (checked_upto < rules.size()) {
    const std::size_t frontier = rules.size();
    for (std::size_t i = 0; i < frontier; ++i)
      for (std::size_t j = (i < checked_upto ? checked_upto : i); j < frontier; ++j) {
        if (++steps > budget) return false;
        // copy: add_rule may reallocate the rule vector
        const VecRule a = rules[i];
        const VecRule b = rules[j];
        Vec overlap(a.lhs.size());
        for (std::size_t k = 0; k < overlap.size(); ++k)
          overlap[k] = std::max(a.lhs[k], b.lhs[k]);
        Vec via_a = vec_sub_add(overlap, a.lhs, a.rhs);
        Vec via_b = vec_sub_add(overlap, b.lhs, b.rhs);
        add_rule(std::move(via_a), std::move(via_b));
      }
    checked_upto = frontier;
  }
  return true;
}

}  // namespace detail

/// Result of tensor saturation. Findings collect anything suspicious about
/// the induced action or the canonical map; per the relation-set caveat they
/// are reported, never silently repaired.
struct TensorResult {
  ModulePtr module;
  MultilinearMap canonical;
  std::vector<Check> findings;
  std::size_t rule_count = 0;
};

/// The ternary tensor product as the quotient of the free commutative monoid
/// on pure tensors x (x) y by the congruence generated by additivity in each
/// slot, zero collapse, and Gamma balance; the action is induced through the
/// M-slot. Saturation is congruence-closure rewriting with deterministic
/// orientation; if the reachable carrier exceeds the budget the tensor may
/// be infinite and the operation fails explicitly.
inline TensorResult tensor(const ModulePtr& m, const ModulePtr& n,
                           const WorkbenchConfig& cfg = {}) {
  if (!same_semiring(*m, *n)) throw StructuralError("tensor: different semirings");
  const std::size_t nm = m->size(), nn = n->size();
  const std::size_t k = nm * nn;
  auto gen = [&](Elem x, Elem y) { return static_cast<std::size_t>(x) * nn + y; };
  auto unit = [&](std::size_t g) {
    detail::Vec v(k, 0);
    v[g] = 1;
    return v;
  };

  std::vector<detail::VecRule> rules;
  auto push_relation = [&](detail::Vec a, detail::Vec b) {
    a = detail::normal_form(std::move(a), rules);
    b = detail::normal_form(std::move(b), rules);
    if (a == b) return;
    detail::VecRule r;
    if (detail::vec_less(a, b)) {
      r.lhs = std::move(b);
      r.rhs = std::move(a);
    } else {
      r.lhs = std::move(a);
      r.rhs = std::move(b);
    }
    rules.push_back(std::move(r));
  };

  const detail::Vec zero_vec(k, 0);
  // zero collapse
  for (Elem y = 0; y < nn; ++y) push_relation(unit(gen(m->zero(), y)), zero_vec);
  for (Elem x = 0; x < nm; ++x) push_relation(unit(gen(x, n->zero())), zero_vec);
  // additivity in each slot
  for (Elem x = 0; x < nm; ++x)
    for (Elem x2 = 0; x2 <= x; ++x2)
      for (Elem y = 0; y < nn; ++y) {
        detail::Vec sum(k, 0);
        sum[gen(x, y)] += 1;
        sum[gen(x2, y)] += 1;
        push_relation(sum, unit(gen(m->add(x, x2), y)));
      }
  for (Elem x = 0; x < nm; ++x)
    for (Elem y = 0; y < nn; ++y)
      for (Elem y2 = 0; y2 <= y; ++y2) {
        detail::Vec sum(k, 0);
        sum[gen(x, y)] += 1;
        sum[gen(x, y2)] += 1;
        push_relation(sum, unit(gen(x, n->add(y, y2))));
      }
  // Gamma balance
  const auto scalars = scalar_tuples(*m->semiring);
  for (const auto& sc : scalars)
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nn; ++y)
        push_relation(unit(gen(m->act(sc.t1, sc.al, x, sc.be, sc.t2), y)),
                      unit(gen(x, n->act(sc.t1, sc.al, y, sc.be, sc.t2))));

  if (!detail::complete_rules(rules, cfg.search_budget))
    throw BudgetError("tensor: saturation unbounded within budget (completion)");

  // enumerate the quotient: classes are normal forms reachable from zero
  std::map<detail::Vec, Elem> id_of;
  std::vector<detail::Vec> classes;
  std::deque<detail::Vec> frontier;
  auto intern = [&](detail::Vec v) -> Elem {
    auto it = id_of.find(v);
    if (it != id_of.end()) return it->second;
    if (classes.size() >= cfg.element_budget)
      throw BudgetError("tensor: saturation unbounded within budget (carrier)");
    Elem id = static_cast<Elem>(classes.size());
    id_of.emplace(v, id);
    classes.push_back(v);
    frontier.push_back(std::move(v));
    return id;
  };
  intern(detail::normal_form(zero_vec, rules));
  while (!frontier.empty()) {
    detail::Vec v = frontier.front();
    frontier.pop_front();
    for (std::size_t g = 0; g < k; ++g) {
      detail::Vec w = v;
      w[g] += 1;
      intern(detail::normal_form(std::move(w), rules));
    }
  }

  const std::size_t sz = classes.size();
  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = "ten(" + m->name + "," + n->name + ")";
  mod->semiring = m->semiring;
  mod->carrier.size = sz;
  mod->carrier.zero = id_of.at(detail::normal_form(zero_vec, rules));
  mod->carrier.add_table.resize(sz * sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) {
      detail::Vec w(k);
      for (std::size_t g = 0; g < k; ++g) w[g] = classes[i][g] + classes[j][g];
      mod->carrier.add_table[i * sz + j] = id_of.at(detail::normal_form(w, rules));
    }
  // induced action through the M-slot, extended additively
  auto act_vec = [&](const ScalarTuple& sc, const detail::Vec& v) {
    detail::Vec w(k, 0);
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nn; ++y) {
        auto c = v[gen(x, y)];
        if (c) w[gen(m->act(sc.t1, sc.al, x, sc.be, sc.t2), y)] += c;
      }
    return w;
  };
  const TernaryGammaSemiring& sr = *m->semiring;
  const std::size_t t = sr.tsize(), g2 = sr.gamma_size;
  mod->action_table.resize(t * g2 * sz * g2 * t);
  for (const auto& sc : scalars)
    for (std::size_t i = 0; i < sz; ++i) {
      const std::size_t idx = (((sc.t1 * g2 + sc.al) * sz + i) * g2 + sc.be) * t + sc.t2;
      mod->action_table[idx] = id_of.at(detail::normal_form(act_vec(sc, classes[i]), rules));
    }

  TensorResult out;
  out.module = mod;
  out.rule_count = rules.size();

  // the induced action is well-defined iff it maps every relation pair to
  // the same class; a violation implicates the relation set, not the checker
  for (const auto& sc : scalars) {
    bool ok = true;
    for (const auto& r : rules) {
      Elem a = id_of.at(detail::normal_form(act_vec(sc, r.lhs), rules));
      Elem b = id_of.at(detail::normal_form(act_vec(sc, r.rhs), rules));
      if (a != b) {
        out.findings.push_back(fail_check(
            "tensor-action-well-defined", {sc.t1, sc.al, sc.be, sc.t2},
            CheckTier::Structural,
            "induced action splits a congruence class; suspect the relation set"));
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }

  out.canonical.left = m;
  out.canonical.right = n;
  out.canonical.target = mod;
  out.canonical.table.resize(nm * nn);
  for (Elem x = 0; x < nm; ++x)
    for (Elem y = 0; y < nn; ++y)
      out.canonical.table[x * nn + y] =
          id_of.at(detail::normal_form(unit(gen(x, y)), rules));
  AxiomReport can = check_multilinear(out.canonical);
  if (!can.passed())
    out.findings.push_back(fail_check(
        "tensor-canonical-multilinear", can.first_failure()->witness,
        CheckTier::Structural,
        "canonical map violates " + can.first_failure()->name +
            "; suspect the relation set"));
  return out;
}

// ---------------------------------------------------------------------------
// Internal hom
// ---------------------------------------------------------------------------

struct InternalHomResult {
  ModulePtr module;                      ///< carrier = Hom-set, when closed
  std::vector<ModuleMorphism> carrier;   ///< lex order; element i is carrier[i]
  AxiomReport report;
};

/// Hom(M, N) with pointwise addition and the pointwise T-action
/// ((t1)_al phi _be t2)(x) := (t1)_al(phi(x))_be t2. Closure failures are
/// counterexample findings in the report, not crashes.
inline InternalHomResult internal_hom(const ModulePtr& m, const ModulePtr& n,
                                      const WorkbenchConfig& cfg = {}) {
  InternalHomResult out;
  out.report.subject = "hom(" + m->name + "," + n->name + ")";
  out.carrier = enumerate_morphisms(m, n, cfg);
  const std::size_t sz = out.carrier.size();
  std::map<std::vector<Elem>, Elem> index_of;
  for (std::size_t i = 0; i < sz; ++i)
    index_of.emplace(out.carrier[i].table, static_cast<Elem>(i));

  auto mod = std::make_shared<TernaryGammaModule>();
  mod->name = "hom(" + m->name + "," + n->name + ")";
  mod->semiring = m->semiring;
  mod->carrier.size = sz;

  std::vector<Elem> zero_table(m->size(), n->zero());
  auto zit = index_of.find(zero_table);
  if (zit == index_of.end()) {
    out.report.add(fail_check("hom-has-zero", {}, CheckTier::Structural,
                              "constant-zero map is not a morphism here"));
    return out;
  }
  mod->carrier.zero = zit->second;

  bool closed = true;
  mod->carrier.add_table.resize(sz * sz);
  for (std::size_t i = 0; i < sz && closed; ++i)
    for (std::size_t j = 0; j < sz && closed; ++j) {
      std::vector<Elem> sum(m->size());
      for (Elem x = 0; x < m->size(); ++x)
        sum[x] = n->add(out.carrier[i].table[x], out.carrier[j].table[x]);
      auto it = index_of.find(sum);
      if (it == index_of.end()) {
        out.report.add(fail_check("hom-closed-under-add", {i, j},
                                  CheckTier::Structural));
        closed = false;
      } else {
        mod->carrier.add_table[i * sz + j] = it->second;
      }
    }
  if (!closed) return out;

  const auto scalars = scalar_tuples(*m->semiring);
  const TernaryGammaSemiring& sr = *m->semiring;
  const std::size_t t = sr.tsize(), g2 = sr.gamma_size;
  mod->action_table.resize(t * g2 * sz * g2 * t);
  for (const auto& sc : scalars) {
    for (std::size_t i = 0; i < sz; ++i) {
      std::vector<Elem> img(m->size());
      for (Elem x = 0; x < m->size(); ++x)
        img[x] = n->act(sc.t1, sc.al, out.carrier[i].table[x], sc.be, sc.t2);
      auto it = index_of.find(img);
      if (it == index_of.end()) {
        out.report.add(fail_check(
            "hom-closed-under-action", {sc.t1, sc.al, i, sc.be, sc.t2},
            CheckTier::Structural,
            "pointwise action image is not a morphism (closure counterexample)"));
        return out;
      }
      const std::size_t idx = (((sc.t1 * g2 + sc.al) * sz + i) * g2 + sc.be) * t + sc.t2;
      mod->action_table[idx] = it->second;
    }
  }
  out.module = mod;
  out.report.absorb(check_module(*mod, cfg.strict_zero), "hom-module/");
  return out;
}

/// The triadic bracket of three morphisms, defined when the target module's
/// carrier doubles as the semiring carrier (elements identified by index):
/// bracket(phi, al, psi, be, omega)(x) = (phi(x))_al (psi(x))_be (omega(x)).
/// Verifies the output is again a morphism.
struct HomBracketResult {
  std::vector<Elem> table;
  std::optional<Elem> index;  ///< position in the Hom carrier, when a member
  bool is_morphism = false;
};

inline HomBracketResult hom_bracket(const InternalHomResult& hom, Elem i, GIdx al,
                                    Elem j, GIdx be, Elem k) {
  if (i >= hom.carrier.size() || j >= hom.carrier.size() || k >= hom.carrier.size())
    throw StructuralError("hom_bracket: morphism index out of range");
  const ModuleMorphism& phi = hom.carrier[i];
  const ModuleMorphism& psi = hom.carrier[j];
  const ModuleMorphism& omg = hom.carrier[k];
  const ModulePtr& n = phi.target;
  if (n->size() != n->semiring->tsize())
    throw StructuralError(
        "hom_bracket: target carrier does not match the semiring carrier");
  HomBracketResult out;
  out.table.resize(phi.source->size());
  for (Elem x = 0; x < phi.source->size(); ++x)
    out.table[x] = n->act(phi.table[x], al, psi.table[x], be, omg.table[x]);
  ModuleMorphism cand;
  cand.source = phi.source;
  cand.target = n;
  cand.table = out.table;
  out.is_morphism = check_morphism(cand).passed();
  for (std::size_t h = 0; h < hom.carrier.size(); ++h)
    if (hom.carrier[h].table == out.table) out.index = static_cast<Elem>(h);
  return out;
}

// ---------------------------------------------------------------------------
// Currying
// ---------------------------------------------------------------------------

/// Certifies the universal-property bijection Hom(M(x)N, P) <-> Multilinear
/// (M, N; P) by composing with the canonical map and matching explicitly.
/// The report carries both cardinalities.
inline AxiomReport curry_check(const ModulePtr& m, const ModulePtr& n,
                               const ModulePtr& p, const TensorResult& t,
                               const WorkbenchConfig& cfg = {}) {
  AxiomReport rep;
  rep.subject = "curry(" + m->name + "," + n->name + ";" + p->name + ")";
  if (!t.module) throw StructuralError("curry_check: tensor not resolved");
  auto homs = enumerate_morphisms(t.module, p, cfg);
  auto mls = enumerate_multilinear(m, n, p, cfg);
  rep.add(pass_check("curry-cardinalities", CheckTier::Info,
                     "|Hom(MxN,P)| = " + std::to_string(homs.size()) +
                         ", |Multilinear(M,N;P)| = " + std::to_string(mls.size())));

  const std::size_t nn = n->size();
  std::vector<std::vector<Elem>> composites;
  for (const auto& h : homs) {
    std::vector<Elem> c(m->size() * nn);
    for (Elem x = 0; x < m->size(); ++x)
      for (Elem y = 0; y < nn; ++y) c[x * nn + y] = h.table[t.canonical.at(x, y)];
    composites.push_back(std::move(c));
  }

  bool members = true;
  std::vector<std::size_t> wit;
  for (std::size_t i = 0; i < composites.size() && members; ++i) {
    bool found = false;
    for (const auto& ml : mls)
      if (ml.table == composites[i]) found = true;
    if (!found) {
      members = false;
      wit = {i};
    }
  }
  rep.add(members ? pass_check("curry-lands-in-multilinear")
                  : fail_check("curry-lands-in-multilinear", wit, CheckTier::Paper,
                               "composite escapes Multilinear(M,N;P)"));

  bool injective = true;
  for (std::size_t i = 0; i < composites.size() && injective; ++i)
    for (std::size_t j = i + 1; j < composites.size() && injective; ++j)
      if (composites[i] == composites[j]) {
        injective = false;
        wit = {i, j};
      }
  rep.add(injective ? pass_check("curry-injective")
                    : fail_check("curry-injective", wit));

  bool surjective = true;
  for (std::size_t i = 0; i < mls.size() && surjective; ++i) {
    bool hit = false;
    for (const auto& c : composites)
      if (c == mls[i].table) hit = true;
    if (!hit) {
      surjective = false;
      wit = {i};
    }
  }
  rep.add(surjective ? pass_check("curry-surjective")
                     : fail_check("curry-surjective", wit, CheckTier::Paper,
                                  "unmatched multilinear map; suspect the tensor "
                                  "relation set"));
  return rep;
}

}  // namespace tgmod

#endif  // TGMOD_MONOIDAL_HPP
