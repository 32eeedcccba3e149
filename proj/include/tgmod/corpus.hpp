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

#ifndef TGMOD_CORPUS_HPP
#define TGMOD_CORPUS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tgmod/construct.hpp"
#include "tgmod/core.hpp"
#include "tgmod/exactness.hpp"

namespace tgmod {

// Built-in desk-scale instances. B1 is the boolean instance (OR addition,
// AND-chain ternary product); Z3 is the group-complete instance (mod-3
// arithmetic); MUT1 is B1 with a single ternary entry corrupted and serves
// as the canonical failing fixture.

inline SemiringPtr triv_semiring() {
  auto s = std::make_shared<TernaryGammaSemiring>();
  s->name = "TRIV";
  s->carrier.size = 1;
  s->carrier.zero = 0;
  s->carrier.add_table = {0};
  s->gamma_size = 1;
  s->ternary_table = {0};
  return s;
}

inline SemiringPtr b1_semiring() {
  auto s = std::make_shared<TernaryGammaSemiring>();
  s->name = "B1";
  s->carrier.size = 2;
  s->carrier.zero = 0;
  s->carrier.names = {"o", "i"};
  s->carrier.add_table = {0, 1, 1, 1};  // OR
  s->gamma_size = 1;
  s->gamma_names = {"g"};
  s->ternary_table.assign(8, 0);
  // [a, g, b, g, c] = a AND b AND c
  s->ternary_table[7] = 1;
  return s;
}

inline SemiringPtr mut1_semiring() {
  auto s = std::make_shared<TernaryGammaSemiring>(*b1_semiring());
  s->name = "MUT1";
  // overwrite the single entry [1, g, 0, g, 0] with 1
  const std::size_t n = 2, g = 1;
  s->ternary_table[(((1 * g + 0) * n + 0) * g + 0) * n + 0] = 1;
  return s;
}

inline SemiringPtr z3_semiring() {
  auto s = std::make_shared<TernaryGammaSemiring>();
  s->name = "Z3";
  s->carrier.size = 3;
  s->carrier.zero = 0;
  s->carrier.add_table.resize(9);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) s->carrier.add_table[x * 3 + y] = (x + y) % 3;
  s->gamma_size = 1;
  s->ternary_table.resize(27);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      for (Elem c = 0; c < 3; ++c)
        s->ternary_table[(a * 3 + b) * 3 + c] = (a * b * c) % 3;
  return s;
}

/// B1 widened to a two-element gamma set with a ternary table constant
/// across Gamma; its stabilizer monoid is all four self-maps of Gamma.
inline SemiringPtr b1g2_semiring() {
  auto s = std::make_shared<TernaryGammaSemiring>();
  s->name = "B1G2";
  s->carrier.size = 2;
  s->carrier.zero = 0;
  s->carrier.add_table = {0, 1, 1, 1};
  s->gamma_size = 2;
  s->gamma_names = {"g0", "g1"};
  s->ternary_table.assign(2 * 2 * 2 * 2 * 2, 0);
  for (GIdx al = 0; al < 2; ++al)
    for (GIdx be = 0; be < 2; ++be)
      s->ternary_table[(((1 * 2 + al) * 2 + 1) * 2 + be) * 2 + 1] = 1;
  return s;
}

/// The semiring carrier viewed as a module over itself (action = ternary
/// product). For B1 this is MB1, for Z3 it is MZ3.
inline ModulePtr regular_module(const SemiringPtr& s, const std::string& name) {
  auto m = std::make_shared<TernaryGammaModule>();
  m->name = name;
  m->semiring = s;
  m->carrier = s->carrier;
  m->action_table = s->ternary_table;
  return m;
}

inline ModulePtr mb1_module() { return regular_module(b1_semiring(), "MB1"); }
inline ModulePtr mz3_module() { return regular_module(z3_semiring(), "MZ3"); }

/// MB1 with the single action entry (1, g, 0, g, 1) overwritten to 1; fails
/// zero-absorption under strict mode.
inline ModulePtr mutm1_module() {
  auto base = mb1_module();
  auto m = std::make_shared<TernaryGammaModule>(*base);
  m->name = "MUTM1";
  const std::size_t n = 2, g = 1;
  m->action_table[(((1 * g + 0) * n + 0) * g + 0) * n + 1] = 1;
  return m;
}

inline ModulePtr mb1g2_module() {
  auto s = b1g2_semiring();
  auto m = std::make_shared<TernaryGammaModule>();
  m->name = "MB1G2";
  m->semiring = s;
  m->carrier = s->carrier;
  m->action_table = s->ternary_table;
  return m;
}

/// Named algebra fixtures: the corpus every acceptance suite draws from.
struct Corpus {
  std::map<std::string, SemiringPtr> semirings;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, ModuleMorphism> morphisms;

  const SemiringPtr& semiring(const std::string& n) const {
    auto it = semirings.find(n);
    if (it == semirings.end()) throw StructuralError("corpus: unknown semiring " + n);
    return it->second;
  }
  const ModulePtr& module(const std::string& n) const {
    auto it = modules.find(n);
    if (it == modules.end()) throw StructuralError("corpus: unknown module " + n);
    return it->second;
  }
  const ModuleMorphism& morphism(const std::string& n) const {
    auto it = morphisms.find(n);
    if (it == morphisms.end()) throw StructuralError("corpus: unknown morphism " + n);
    return it->second;
  }
};

inline Corpus build_corpus(const WorkbenchConfig& cfg = {}) {
  Corpus c;
  c.semirings["TRIV"] = triv_semiring();
  c.semirings["B1"] = b1_semiring();
  c.semirings["Z3"] = z3_semiring();
  c.semirings["B1G2"] = b1g2_semiring();
  c.semirings["MUT1"] = mut1_semiring();

  c.modules["ZB1"] = zero_module(c.semirings["B1"], "ZB1");
  c.modules["ZZ3"] = zero_module(c.semirings["Z3"], "ZZ3");
  auto mb1 = regular_module(c.semirings["B1"], "MB1");
  auto mz3 = regular_module(c.semirings["Z3"], "MZ3");
  c.modules["MB1"] = mb1;
  c.modules["MZ3"] = mz3;
  c.modules["MB1G2"] = mb1g2_module();
  c.modules["MUTM1"] = mutm1_module();

  ProductResult pb1 = product_module(mb1, mb1, cfg);
  auto pb1_named = std::make_shared<TernaryGammaModule>(*pb1.module);
  pb1_named->name = "PB1";
  c.modules["PB1"] = pb1_named;
  ProductResult pz3 = product_module(mz3, mz3, cfg);
  auto pz3_named = std::make_shared<TernaryGammaModule>(*pz3.module);
  pz3_named->name = "PZ3";
  c.modules["PZ3"] = pz3_named;

  // quotient derivative: PB1 / closure{((0,1) ~ (0,0))}
  {
    Congruence cong = congruence_closure(c.modules["PB1"], {{1, 0}});
    QuotientResult q = quotient(c.modules["PB1"], cong, "QB1");
    c.modules["QB1"] = q.module;
    ModuleMorphism proj = q.projection;
    c.morphisms["projQB1"] = proj;
  }
  // submodule derivative: closure of {(1,0)} inside PB1
  {
    SubmoduleResult sub = submodule_generated(c.modules["PB1"], {2}, "SB1");
    c.modules["SB1"] = sub.module;
    c.morphisms["inclSB1"] = sub.inclusion;
  }

  c.morphisms["idMB1"] = identity_morphism(mb1);
  c.morphisms["zeroMB1"] = zero_morphism(mb1, mb1);
  c.morphisms["idMZ3"] = identity_morphism(mz3);
  c.morphisms["zeroMZ3"] = zero_morphism(mz3, mz3);
  {
    ModuleMorphism dbl;
    dbl.source = dbl.target = mz3;
    dbl.table = {0, 2, 1};
    c.morphisms["dblMZ3"] = dbl;
  }
  {
    ModuleMorphism diag;
    diag.source = mb1;
    diag.target = c.modules["PB1"];
    diag.table = {0, 3};
    c.morphisms["diagMB1"] = diag;
  }
  {
    ModuleMorphism diag;
    diag.source = mz3;
    diag.target = c.modules["PZ3"];
    diag.table = {0, 4, 8};
    c.morphisms["diagMZ3"] = diag;
  }
  {
    ModuleMorphism swap;  // fails additivity: not a morphism, kept as fixture
    swap.source = swap.target = mb1;
    swap.table = {1, 0};
    c.morphisms["swapMB1"] = swap;
  }
  return c;
}

}  // namespace tgmod

#endif  // TGMOD_CORPUS_HPP
