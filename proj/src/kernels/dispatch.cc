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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "unicity/kernels.h"

namespace unicity::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(UNICITY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa DefaultIsa() {
  const char* env = std::getenv("UNICITY_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return Isa::kScalar;
  return CpuHasAvx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& Active() {
  static std::atomic<Isa> isa{DefaultIsa()};
  return isa;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool IsaSupported(Isa isa) {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && CpuHasAvx2());
}

Isa ActiveIsa() { return Active().load(std::memory_order_relaxed); }

void ForceIsa(Isa isa) {
  if (!IsaSupported(isa)) {
    throw std::invalid_argument("kernel variant not supported: " +
                                std::string(IsaName(isa)));
  }
  Active().store(isa, std::memory_order_relaxed);
}

#if defined(UNICITY_HAVE_AVX2)
#define UNICITY_DISPATCH(fn, ...)                               \
  (ActiveIsa() == Isa::kAvx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define UNICITY_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

bool AnySuperset(std::span<const std::uint64_t> masks,
                 std::uint64_t required) {
  return UNICITY_DISPATCH(AnySuperset, masks, required);
}

std::uint32_t MaxValue(std::span<const std::uint32_t> values) {
  return UNICITY_DISPATCH(MaxValue, values);
}

std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value) {
  return UNICITY_DISPATCH(CountEqual, values, value);
}

std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value) {
  return UNICITY_DISPATCH(FindFirstEqual, values, value);
}

#undef UNICITY_DISPATCH

}  // namespace unicity::kernels
