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

#ifndef BADENC_RNG_H_
#define BADENC_RNG_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace badenc {

// Seeded generator with platform-stable bounded draws. std::mt19937_64 output
// is fixed by the standard; the std distributions are not, so bounded and
// shuffle draws are implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [lo, hi].
  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi) {
    return lo + Below(hi - lo + 1);
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

  // Uniform sample of `count` distinct indices from [0, population), in draw
  // order.
  std::vector<std::size_t> SampleIndices(std::size_t population,
                                         std::size_t count);

 private:
  std::mt19937_64 engine_;
};

// Derives an independent seed for a labelled stream, so that adding a new
// consumer of randomness never shifts another consumer's draws.
std::uint64_t DeriveSeed(std::uint64_t root, std::string_view label);
std::uint64_t DeriveSeed(std::uint64_t root, std::string_view label,
                         std::initializer_list<std::uint64_t> salt);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace badenc

#endif  // BADENC_RNG_H_
