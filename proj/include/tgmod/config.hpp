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

#ifndef TGMOD_CONFIG_HPP
#define TGMOD_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgmod {

/// Dense element index into a finite carrier. Element names, when present,
/// are presentation-only; every table speaks indices.
using Elem = std::uint32_t;
/// Index into the gamma parameter set.
using GIdx = std::uint32_t;

/// Malformed input: out-of-range table entries, mismatched sizes, morphisms
/// over different semirings, unresolved references. Distinct from axiom
/// failures, which are reported with witnesses instead of thrown.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource limit was hit: element budgets, search budgets, enumeration
/// bounds, saturation that does not terminate within its budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knobs shared by every operation. Reports embed the config they ran under
/// so results are reproducible from the report alone.
struct WorkbenchConfig {
  bool strict_zero = true;            ///< enforce zero-absorption normalization axioms
  std::size_t truncation = 3;         ///< max simplicial level
  std::size_t element_budget = 4096;  ///< max carrier size per constructed object
  std::size_t search_budget = 10000000;  ///< max candidates per search/enumeration
  std::uint64_t seed = 0;             ///< seed for sampled enumeration
};

}  // namespace tgmod

#endif  // TGMOD_CONFIG_HPP
