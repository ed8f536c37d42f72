// Copyright 2026 The Shellgen Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <unordered_set>
#include <vector>

#include "shellgen/hash.hpp"
#include "shellgen/rng.hpp"

using namespace shellgen;

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Rng, SplitMix64ReferenceOutput) {
  // First outputs of SplitMix64 seeded with 0.
  Rng rng(0);
  EXPECT_EQ(rng.next_u64(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next_u64(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next_u64(), 0x06c45d188009454fULL);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.gaussian(), b.gaussian());
}

TEST(Rng, Uniform01Range) {
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, UniformIntCoversClosedRange) {
  Rng rng(3);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const auto v = rng.uniform_int(15, 20);
    ASSERT_GE(v, 15);
    ASSERT_LE(v, 20);
    ++hist[static_cast<std::size_t>(v - 15)];
  }
  for (int h : hist) EXPECT_NEAR(h / 60000.0, 1.0 / 6.0, 0.01);
  EXPECT_EQ(rng.uniform_int(7, 7), 7);
}

TEST(Rng, GaussianMoments) {
  Rng rng(17);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian(2.0, 3.0);
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sum_sq / n - mean * mean);
  EXPECT_NEAR(mean, 2.0, 0.03);
  EXPECT_NEAR(sd, 3.0, 0.03);
}

TEST(Rng, BoxMullerUsesBothVariates) {
  Rng a(8);
  const double first = a.gaussian();
  const double second = a.gaussian();
  Rng b(8);
  const double u1 = 1.0 - b.uniform01();
  const double u2 = b.uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  EXPECT_EQ(first, r * std::cos(2.0 * 3.14159265358979323846 * u2));
  EXPECT_EQ(second, r * std::sin(2.0 * 3.14159265358979323846 * u2));
}

TEST(DeriveSeed, StableAndDistinct) {
  EXPECT_EQ(derive_seed(0, "shell", 0), derive_seed(0, "shell", 0));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(0, "shell", 1));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(0, "scene", 0));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(1, "shell", 0));
}

TEST(DeriveSeed, NoCollisionsOverAMillion) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1'100'000);
  for (std::uint64_t i = 0; i < 500'000; ++i) {
    ASSERT_TRUE(seen.insert(derive_seed(0, "shell", i)).second) << i;
    ASSERT_TRUE(seen.insert(derive_seed(0, "scene", i)).second) << i;
  }
  EXPECT_EQ(seen.size(), 1'000'000u);
}
