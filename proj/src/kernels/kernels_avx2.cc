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

// Compiled with -mavx2. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "unicity/kernels.h"

namespace unicity::kernels::avx2 {

bool AnySuperset(std::span<const std::uint64_t> masks,
                 std::uint64_t required) {
  const std::size_t n = masks.size();
  const std::uint64_t* data = masks.data();
  const __m256i req = _mm256_set1_epi64x(static_cast<long long>(required));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 4));
    const __m256i ea = _mm256_cmpeq_epi64(_mm256_and_si256(a, req), req);
    const __m256i eb = _mm256_cmpeq_epi64(_mm256_and_si256(b, req), req);
    if (!_mm256_testz_si256(_mm256_or_si256(ea, eb), _mm256_or_si256(ea, eb))) {
      return true;
    }
  }
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i ea = _mm256_cmpeq_epi64(_mm256_and_si256(a, req), req);
    if (!_mm256_testz_si256(ea, ea)) return true;
  }
  for (; i < n; ++i) {
    if ((data[i] & required) == required) return true;
  }
  return false;
}

std::uint32_t MaxValue(std::span<const std::uint32_t> values) {
  const std::size_t n = values.size();
  const std::uint32_t* data = values.data();
  std::size_t i = 0;
  std::uint32_t best = 0;
  if (n >= 16) {
    __m256i m0 = _mm256_setzero_si256();
    __m256i m1 = _mm256_setzero_si256();
    for (; i + 16 <= n; i += 16) {
      m0 = _mm256_max_epu32(m0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
      m1 = _mm256_max_epu32(m1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 8)));
    }
    m0 = _mm256_max_epu32(m0, m1);
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), m0);
    for (std::uint32_t v : lanes) best = std::max(best, v);
  }
  for (; i < n; ++i) best = std::max(best, data[i]);
  return best;
}

std::size_t CountEqual(std::span<const std::uint32_t> values,
                       std::uint32_t value) {
  const std::size_t n = values.size();
  const std::uint32_t* data = values.data();
  const __m256i needle = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, needle)));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
  }
  for (; i < n; ++i) count += (data[i] == value);
  return count;
}

std::size_t FindFirstEqual(std::span<const std::uint32_t> values,
                           std::uint32_t value) {
  const std::size_t n = values.size();
  const std::uint32_t* data = values.data();
  const __m256i needle = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, needle)));
    if (bits != 0) {
      return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(bits)));
    }
  }
  for (; i < n; ++i) {
    if (data[i] == value) return i;
  }
  return n;
}

}  // namespace unicity::kernels::avx2
