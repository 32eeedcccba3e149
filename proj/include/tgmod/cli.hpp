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

#ifndef TGMOD_CLI_HPP
#define TGMOD_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace tgmod::cli {

// Exit contract: 0 = all checks passed, 1 = axiom/certification failure
// (findings present), 2 = usage/parse/budget error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgmod::cli

#endif  // TGMOD_CLI_HPP
