// Copyright 2026 The dualgame Authors
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

#include "dualgame/rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

using dualgame::SeedStream;

TEST(seed_stream, same_seed_same_sequence) {
  SeedStream a(12345, 7);
  SeedStream b(12345, 7);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
}

TEST(seed_stream, different_seeds_or_streams_differ) {
  SeedStream a(1);
  SeedStream b(2);
  SeedStream c(1, 1);
  bool ab_differ = false, ac_differ = false;
  for (int i = 0; i < 16; ++i) {
    std::uint64_t va = a.next_u64();
    if (va != b.next_u64()) ab_differ = true;
    if (va != c.next_u64()) ac_differ = true;
  }
  EXPECT_TRUE(ab_differ);
  EXPECT_TRUE(ac_differ);
}

TEST(seed_stream, substreams_are_stable_and_disjoint) {
  SeedStream root(99);
  // Substream identity must not depend on how much the parent has drawn.
  SeedStream child_before = root.substream(3);
  root.next_u64();
  root.next_u64();
  SeedStream child_after = root.substream(3);
  for (int i = 0; i < 32; ++i) {
    EXPECT_EQ(child_before.next_u64(), child_after.next_u64());
  }
  // Different ids give different sequences.
  SeedStream c0 = root.substream(0);
  SeedStream c1 = root.substream(1);
  bool differ = false;
  for (int i = 0; i < 16; ++i) {
    if (c0.next_u64() != c1.next_u64()) differ = true;
  }
  EXPECT_TRUE(differ);
}

TEST(seed_stream, unit_draws_live_in_half_open_interval) {
  SeedStream s(2024);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double u = s.next_unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Mean of n uniforms has sigma = 1/sqrt(12 n); allow 5 sigma.
  EXPECT_NEAR(sum / n, 0.5, 5.0 / std::sqrt(12.0 * n));
}

TEST(seed_stream, normal_draws_have_sane_moments) {
  SeedStream s(55);
  const int n = 20000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = s.next_normal();
    sum += x;
    sum_sq += x * x;
  }
  double mean = sum / n;
  double var = sum_sq / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 5.0 / std::sqrt(static_cast<double>(n)));
  EXPECT_NEAR(var, 1.0, 0.08);
}
