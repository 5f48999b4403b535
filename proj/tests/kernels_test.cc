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

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace unicity::kernels {
namespace {

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!IsaSupported(Isa::kAvx2)) GTEST_SKIP() << "no AVX2 on this machine";
  }
  std::mt19937_64 rng_{20181001};
};

TEST_F(KernelEquivalence, AnySupersetMatchesScalar) {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = rng_() % 70;
    std::vector<std::uint64_t> masks(len);
    // Sparse masks make hits rare enough to exercise both outcomes.
    for (auto& m : masks) m = rng_() & rng_() & rng_();
    const std::uint64_t required = rng_() & rng_() & rng_() & rng_();
    EXPECT_EQ(scalar::AnySuperset(masks, required), avx2::AnySuperset(masks, required));
    EXPECT_EQ(scalar::AnySuperset(masks, 0), avx2::AnySuperset(masks, 0));
  }
}

TEST_F(KernelEquivalence, IntegerScansMatchScalar) {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = rng_() % 100;
    std::vector<std::uint32_t> v(len);
    const std::uint32_t range = 1 + static_cast<std::uint32_t>(rng_() % 8);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng_() % range);
    if (trial % 7 == 0 && len > 0) v[rng_() % len] = 0xffffffffu;
    const std::uint32_t probe = static_cast<std::uint32_t>(rng_() % (range + 1));
    EXPECT_EQ(scalar::MaxValue(v), avx2::MaxValue(v));
    EXPECT_EQ(scalar::CountEqual(v, probe), avx2::CountEqual(v, probe));
    EXPECT_EQ(scalar::FindFirstEqual(v, probe), avx2::FindFirstEqual(v, probe));
  }
}

TEST(Kernels, ScalarSemantics) {
  const std::vector<std::uint64_t> masks = {0b0101, 0b0011};
  EXPECT_TRUE(scalar::AnySuperset(masks, 0b0001));
  EXPECT_TRUE(scalar::AnySuperset(masks, 0b0011));
  EXPECT_FALSE(scalar::AnySuperset(masks, 0b0111));
  EXPECT_FALSE(scalar::AnySuperset({}, 0));

  const std::vector<std::uint32_t> v = {3, 9, 2, 9, 1};
  EXPECT_EQ(scalar::MaxValue(v), 9u);
  EXPECT_EQ(scalar::MaxValue({}), 0u);
  EXPECT_EQ(scalar::CountEqual(v, 9), 2u);
  EXPECT_EQ(scalar::FindFirstEqual(v, 9), 1u);
  EXPECT_EQ(scalar::FindFirstEqual(v, 7), v.size());
}

TEST(Kernels, ForceIsaSwitchesDispatch) {
  const Isa before = ActiveIsa();
  ForceIsa(Isa::kScalar);
  EXPECT_EQ(ActiveIsa(), Isa::kScalar);
  const std::vector<std::uint32_t> v = {4, 8, 8};
  EXPECT_EQ(CountEqual(v, 8), 2u);
  if (IsaSupported(Isa::kAvx2)) {
    ForceIsa(Isa::kAvx2);
    EXPECT_EQ(ActiveIsa(), Isa::kAvx2);
    EXPECT_EQ(CountEqual(v, 8), 2u);
  } else {
    EXPECT_THROW(ForceIsa(Isa::kAvx2), std::invalid_argument);
  }
  ForceIsa(before);
}

}  // namespace
}  // namespace unicity::kernels
