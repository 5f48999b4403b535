//
// Copyright 2026 The Unicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef UNICITY_CLI_H_
#define UNICITY_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace unicity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitConfigError = 2;

// args[0] is the program name. Human-readable summaries go to `out`,
// diagnostics to `err`. Returns the process exit code.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// "1..10", "4,5,10,15", "1..3,8" -> expanded list. Throws ConfigError.
std::vector<int> ParseIntList(const std::string& text);
std::vector<double> ParseDoubleList(const std::string& text);

}  // namespace unicity::cli

#endif  // UNICITY_CLI_H_
