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

#ifndef TGMOD_REPORT_JSON_HPP
#define TGMOD_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "tgmod/config.hpp"
#include "tgmod/report.hpp"

namespace tgmod {

// nlohmann::json objects keep keys sorted, so two runs of the same command
// under the same config and seed dump byte-identical documents.

inline nlohmann::json to_json(const Check& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["status"] = c.passed ? "pass" : "fail";
  j["witness"] = c.witness;
  j["tier"] = tier_name(c.tier);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline nlohmann::json to_json(const WorkbenchConfig& cfg) {
  nlohmann::json j;
  j["strict_zero"] = cfg.strict_zero;
  j["truncation"] = cfg.truncation;
  j["element_budget"] = cfg.element_budget;
  j["search_budget"] = cfg.search_budget;
  j["seed"] = cfg.seed;
  return j;
}

inline nlohmann::json report_document(const std::string& command,
                                      const WorkbenchConfig& cfg,
                                      const std::string& subject,
                                      const std::vector<Check>& checks,
                                      nlohmann::json artifacts) {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = to_json(cfg);
  j["subject"] = subject;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  j["checks"] = arr;
  j["artifacts"] = std::move(artifacts);
  return j;
}

}  // namespace tgmod

#endif  // TGMOD_REPORT_JSON_HPP
