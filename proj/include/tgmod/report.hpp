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

#ifndef TGMOD_REPORT_HPP
#define TGMOD_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tgmod {

/// Classifies a check. Paper axioms are the defining equations; Normalization
/// axioms are the zero-absorption laws enforced only in strict mode;
/// Structural marks shape/precondition checks. Strong/Weak grade homotopy
/// certificates: an explicit homotopy vs. zero-on-homology evidence.
enum class CheckTier { Paper, Normalization, Structural, Strong, Weak, Info };

inline const char* tier_name(CheckTier t) {
  switch (t) {
    case CheckTier::Paper: return "paper";
    case CheckTier::Normalization: return "normalization";
    case CheckTier::Structural: return "structural";
    case CheckTier::Strong: return "strong";
    case CheckTier::Weak: return "weak";
    case CheckTier::Info: return "info";
  }
  return "unknown";
}

/// One verified law. A failing check carries at least one witness tuple;
/// re-evaluating the witness against the tables reproduces the failure.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  ///< empty when passed
  CheckTier tier = CheckTier::Paper;
  std::string note;  ///< free-form detail (cardinalities, conventions, coverage)
};

struct AxiomReport {
  std::string subject;
  bool strict_mode = true;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  void add(Check c) { checks.push_back(std::move(c)); }

  /// Merge another report in, prefixing its check names.
  void absorb(const AxiomReport& other, const std::string& prefix) {
    for (auto c : other.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
};

inline Check pass_check(std::string name, CheckTier tier = CheckTier::Paper,
                        std::string note = {}) {
  Check c;
  c.name = std::move(name);
  c.passed = true;
  c.tier = tier;
  c.note = std::move(note);
  return c;
}

inline Check fail_check(std::string name, std::vector<std::size_t> witness,
                        CheckTier tier = CheckTier::Paper, std::string note = {}) {
  Check c;
  c.name = std::move(name);
  c.passed = false;
  c.witness = std::move(witness);
  c.tier = tier;
  c.note = std::move(note);
  return c;
}

}  // namespace tgmod

#endif  // TGMOD_REPORT_HPP
