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

#include <numeric>
#include <stdexcept>

namespace badenc {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Below: bound must be > 0");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> Rng::SampleIndices(std::size_t population,
                                            std::size_t count) {
  if (count > population) {
    throw std::invalid_argument("Rng::SampleIndices: count exceeds population");
  }
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates from the front.
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + Below(population - i)]);
  }
  pool.resize(count);
  return pool;
}

std::uint64_t Fnv1a64(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t DeriveSeed(std::uint64_t root, std::string_view label) {
  return SplitMix64(root ^ SplitMix64(Fnv1a64(label)));
}

std::uint64_t DeriveSeed(std::uint64_t root, std::string_view label,
                         std::initializer_list<std::uint64_t> salt) {
  std::uint64_t s = DeriveSeed(root, label);
  for (std::uint64_t v : salt) s = SplitMix64(s ^ SplitMix64(v));
  return s;
}

}  // namespace badenc
