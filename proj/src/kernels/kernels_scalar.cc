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

#include "unicity/kernels.h"

#include <algorithm>

namespace unicity::kernels::scalar {

bool AnySuperset(std::span<const std::uint64_t> masks,
                 std::uint64_t required) {
  for (std::uint64_t m : masks) {
    if ((m & required) == required) return true;
  }
  return false;
}

std::uint32_t MaxValue(std::span<const std::uint32_t> values) {
  std::uint32_t best = 0;
  for (std::uint32_t v : values) best = std::max(best, v);
  return best;
}

std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value) {
  std::size_t count = 0;
  for (std::uint32_t v : values) count += (v == value);
  return count;
}

std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == value) return i;
  }
  return values.size();
}

}  // namespace unicity::kernels::scalar
