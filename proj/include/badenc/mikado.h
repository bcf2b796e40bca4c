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

#ifndef BADENC_MIKADO_H_
#define BADENC_MIKADO_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "badenc/perturb.h"
#include "badenc/summarizer.h"

namespace badenc {

struct MikadoConfig {
  PerturbationTechnique technique{Technique::kZwsp, 0};
  std::size_t population = 20;
  // Sites removed per candidate.
  std::size_t step = 250;
  // Largest summary similarity still counted as a successful attack.
  double budget = 0.1;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 1000;
  // rlo is refused unless set: its summaries cannot be reliably stripped.
  bool allow_bidi = false;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Similarity between the clean and adversarial summaries, both already
// stripped of perturbations. Bleu by default.
using SimilarityFn =
    std::function<double(std::string_view reference, std::string_view candidate)>;

struct MikadoState {
  std::string original;
  std::string adversarial;
  // Single source of truth for `adversarial`: ApplySites(original, sites).
  std::vector<PerturbationSite> sites;
  // Similarity of the retained adversarial sample.
  double similarity = 1.0;
  bool budget_met = false;
  // Candidate generations evaluated, including a final rejected one.
  std::size_t iterations = 0;
  std::size_t full_site_count = 0;
  // Site count after full obfuscation and after each accepted generation.
  std::vector<std::size_t> site_history;
};

// Removes a uniform sample of min(n, |sites|) sites for each of p
// candidates. Deterministic in (seed, iteration).
std::vector<std::vector<PerturbationSite>> SampleCandidateSites(
    const std::vector<PerturbationSite>& sites, std::size_t population,
    std::size_t step, std::uint64_t seed, std::size_t iteration);

// Candidate texts for the state's current generation.
std::vector<std::string> SanitizeCandidates(const MikadoState& state,
                                            std::size_t population,
                                            std::size_t step,
                                            std::uint64_t seed);

// Starts from the full obfuscation and, while the similarity stays within
// budget, replaces the sample with the least similar of `population`
// thinned-out candidates. Stops at the first generation whose best candidate
// exceeds the budget, when no sites remain, or at max_iterations.
MikadoState Mikado(std::string_view text, const MikadoConfig& config,
                   const Summarizer& summarizer,
                   const SimilarityFn& similarity = {},
                   const HomoglyphTable& table = HomoglyphTable::Default());

// Similarity of the two summaries after stripping, as Mikado measures it.
double SummarySimilarity(std::string_view clean_summary,
                         std::string_view adversarial_summary,
                         const SimilarityFn& similarity = {},
                         const HomoglyphTable& table = HomoglyphTable::Default());

}  // namespace badenc

#endif  // BADENC_MIKADO_H_
