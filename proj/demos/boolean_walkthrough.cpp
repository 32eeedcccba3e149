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

// Walkthrough: build the boolean semiring B1 by hand, check its axioms,
// form a product module, and inspect a quotient. Run from the build tree:
//   ./boolean_walkthrough

#include <iostream>

#include "tgmod/corpus.hpp"
#include "tgmod/enumerate.hpp"
#include "tgmod/exactness.hpp"

int main() {
  using namespace tgmod;

  auto b1 = b1_semiring();
  auto rep = check_semiring(*b1);
  std::cout << "B1 axioms: " << (rep.passed() ? "pass" : "fail") << "\n";
  for (const auto& c : rep.checks)
    std::cout << "  " << c.name << ": " << (c.passed ? "ok" : "VIOLATED") << "\n";

  auto mb1 = mb1_module();
  auto prod = product_module(mb1, mb1);
  std::cout << "MB1 x MB1 has " << prod.module->size() << " elements\n";

  auto homs = enumerate_morphisms(mb1, mb1);
  std::cout << "Hom(MB1, MB1) has " << homs.size() << " morphisms\n";

  auto cong = congruence_closure(prod.module, {{1, 0}});
  auto q = quotient(prod.module, cong);
  std::cout << "collapsing (0,1) ~ (0,0) leaves " << q.module->size()
            << " classes\n";

  auto mut = mut1_semiring();
  auto bad = check_semiring(*mut);
  const Check* failure = bad.first_failure();
  std::cout << "MUT1 first failing law: " << failure->name << " at witness (";
  for (std::size_t i = 0; i < failure->witness.size(); ++i)
    std::cout << (i ? "," : "") << failure->witness[i];
  std::cout << ")\n";
  return 0;
}
