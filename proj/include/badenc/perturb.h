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

#ifndef BADENC_PERTURB_H_
#define BADENC_PERTURB_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "badenc/unicode_core.h"

namespace badenc {

enum class Technique {
  kBase,
  kZwsp,
  kZwnj,
  kZwj,
  kHomo,
  kHomo2,
  kRlo,
  kBksp,
  kDel,
  kZwsp2,
};

std::string_view TechniqueName(Technique t);
// Throws std::invalid_argument for unknown names.
Technique ParseTechnique(std::string_view name);
std::optional<Technique> TryParseTechnique(std::string_view name);

// The eight Bad Search Wiki techniques, in table order.
inline constexpr Technique kWikiTechniques[] = {
    Technique::kBase, Technique::kZwsp, Technique::kZwnj, Technique::kZwj,
    Technique::kHomo, Technique::kRlo,  Technique::kBksp, Technique::kDel,
};

// Wiki techniques plus the two Elasticsearch-only variants.
inline constexpr Technique kAllTechniques[] = {
    Technique::kBase, Technique::kZwsp,  Technique::kZwnj, Technique::kZwj,
    Technique::kHomo, Technique::kHomo2, Technique::kRlo,  Technique::kBksp,
    Technique::kDel,  Technique::kZwsp2,
};

// Techniques accepted by InjectK.
inline constexpr Technique kInjectableTechniques[] = {
    Technique::kZwsp, Technique::kZwnj, Technique::kZwj,
    Technique::kBksp, Technique::kDel,  Technique::kHomo,
};

struct PerturbationTechnique {
  Technique kind = Technique::kBase;
  // Drives homoglyph choice for homo and word slots for zwsp2.
  std::uint64_t seed = 0;

  bool operator==(const PerturbationTechnique&) const = default;
};

inline constexpr std::size_t kDefaultZwsp2MaxCount = 3;

// One removable unit of perturbation. Sites are positioned against the
// original (clean) text, so any subset of a site list can be re-applied.
struct PerturbationSite {
  enum class Kind { kInsertion, kSubstitution, kWrap };

  Kind kind = Kind::kInsertion;
  // kInsertion: slot before original scalar `position` (0..L).
  // kSubstitution: index of the replaced scalar.
  std::size_t position = 0;
  std::u32string inserted;
  char32_t original = 0;
  char32_t replacement = 0;

  bool operator==(const PerturbationSite&) const = default;
};

// Every site of the full obfuscation of `text`. For rlo the whole wrap is a
// single site.
std::vector<PerturbationSite> FullObfuscationSites(
    std::u32string_view text, const PerturbationTechnique& t,
    const HomoglyphTable& table = HomoglyphTable::Default());

// Rebuilds the perturbed text from the clean text and a site list. Sites may
// be in any order.
std::u32string ApplySites(std::u32string_view text,
                          std::span<const PerturbationSite> sites);

// Full obfuscation. Throws std::invalid_argument when `text` is not
// scan-clean, which blocks perturbing an already perturbed string.
std::string Obfuscate(std::string_view text, const PerturbationTechnique& t,
                      const HomoglyphTable& table = HomoglyphTable::Default());

// Partial obfuscation with exactly k sites at seeded positions. For a fixed
// seed the sites chosen for k are a prefix of those chosen for any larger k.
// Throws std::out_of_range when k exceeds the available slots and
// std::invalid_argument for rlo, zwsp2, homo2, base, or k == 0.
std::string InjectK(std::string_view text, Technique t, std::size_t k,
                    std::uint64_t seed,
                    const HomoglyphTable& table = HomoglyphTable::Default());

// Per distinct word (case-sensitive, whitespace-delimited), draws a ZWSP
// count in [1, max_count] clamped to the word's intra-word boundaries, and
// places the same insertions in every occurrence of that word.
std::string Zwsp2Title(std::string_view title, std::uint64_t seed,
                       std::size_t max_count = kDefaultZwsp2MaxCount);

// Applies the rlo wrap to one seeded-random whitespace-delimited word,
// leaving the rest of the text untouched. Used as the rlo point of the
// disruption sweep. Throws std::out_of_range if the text has no words.
std::string RloWordPerturb(std::string_view text, std::uint64_t seed,
                           const HomoglyphTable& table = HomoglyphTable::Default());

}  // namespace badenc

#endif  // BADENC_PERTURB_H_
