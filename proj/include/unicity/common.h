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

#ifndef UNICITY_COMMON_H_
#define UNICITY_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unicity {

// Dense indices into a TraceStore's user and domain dictionaries. Both
// dictionaries are sorted, so id order equals lexicographic name order.
using UserId = std::uint32_t;
using DomainId = std::uint32_t;

// Bad flags, unreadable mapping files, missing columns. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data that cannot be analyzed. CLI exit code 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { kMostVisited, kLeastVisited };

inline const char* DirectionName(Direction d) {
  return d == Direction::kMostVisited ? "most" : "least";
}

Direction ParseDirection(const std::string& s);

}  // namespace unicity

#endif  // UNICITY_COMMON_H_
