// Copyright 2026 The badenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "badenc/rng.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace badenc {
namespace {

TEST(RngTest, BelowStaysInRange) {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.Below(13), 13u);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, SampleIndicesAreDistinct) {
  Rng rng(3);
  const auto picks = rng.SampleIndices(50, 20);
  EXPECT_EQ(picks.size(), 20u);
  EXPECT_EQ(std::set<std::size_t>(picks.begin(), picks.end()).size(), 20u);
  for (std::size_t p : picks) EXPECT_LT(p, 50u);
  EXPECT_THROW(rng.SampleIndices(3, 4), std::invalid_argument);
}

TEST(RngTest, ShuffleIsPermutation) {
  std::vector<int> v(100);
  for (int i = 0; i < 100; ++i) v[i] = i;
  Rng(9).Shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(RngTest, DeriveSeedSeparatesLabelsAndSalts) {
  EXPECT_EQ(DeriveSeed(1, "a"), DeriveSeed(1, "a"));
  EXPECT_NE(DeriveSeed(1, "a"), DeriveSeed(1, "b"));
  EXPECT_NE(DeriveSeed(1, "a"), DeriveSeed(2, "a"));
  EXPECT_NE(DeriveSeed(1, "a", {1}), DeriveSeed(1, "a", {2}));
  EXPECT_NE(DeriveSeed(1, "a", {1, 2}), DeriveSeed(1, "a", {2, 1}));
}

TEST(RngTest, Fnv1aKnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

}  // namespace
}  // namespace badenc
