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

// Integer scan kernels used in the hot loops of identification and
// overlap re-identification. Every kernel has a portable scalar reference;
// wider variants are picked at runtime from what the CPU reports and must
// return exactly what the scalar one returns.

#ifndef UNICITY_KERNELS_H_
#define UNICITY_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace unicity::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// True if this binary carries the variant and the CPU can run it.
bool IsaSupported(Isa isa);

// Variant currently used by the dispatching entry points. Defaults to the
// widest supported one; UNICITY_SIMD=scalar in the environment pins scalar.
Isa ActiveIsa();

// Overrides dispatch (tests, benchmarking). Throws std::invalid_argument if
// the variant is not supported here.
void ForceIsa(Isa isa);

// Returns true if some mask m satisfies (m & required) == required.
bool AnySuperset(std::span<const std::uint64_t> masks, std::uint64_t required);

// Largest element; 0 for an empty span.
std::uint32_t MaxValue(std::span<const std::uint32_t> values);

std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value);

// Index of the first element equal to value, or values.size().
std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value);

namespace scalar {
bool AnySuperset(std::span<const std::uint64_t> masks, std::uint64_t required);
std::uint32_t MaxValue(std::span<const std::uint32_t> values);
std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value);
std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value);
}  // namespace scalar

namespace avx2 {
bool AnySuperset(std::span<const std::uint64_t> masks, std::uint64_t required);
std::uint32_t MaxValue(std::span<const std::uint32_t> values);
std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value);
std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value);
}  // namespace avx2

}  // namespace unicity::kernels

#endif  // UNICITY_KERNELS_H_
