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

#include "badenc/mikado.h"

#include <algorithm>
#include <stdexcept>

#include "badenc/metrics.h"
#include "badenc/rng.h"
#include "badenc/sanitize.h"
#include "badenc/utf8.h"

namespace badenc {

void MikadoConfig::Validate() const {
  if (population < 1) throw std::invalid_argument("population must be >= 1");
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  if (!(budget >= 0.0 && budget <= 1.0)) {
    throw std::invalid_argument("budget must lie in [0, 1]");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  switch (technique.kind) {
    case Technique::kRlo:
      if (!allow_bidi) {
        throw std::invalid_argument(
            "rlo is disabled for Mikado; set allow_bidi to override");
      }
      break;
    case Technique::kZwsp2:
      throw std::invalid_argument("zwsp2 is a title-only technique");
    default:
      break;
  }
}

std::vector<std::vector<PerturbationSite>> SampleCandidateSites(
    const std::vector<PerturbationSite>& sites, std::size_t population,
    std::size_t step, std::uint64_t seed, std::size_t iteration) {
  const std::size_t remove = std::min(step, sites.size());
  std::vector<std::vector<PerturbationSite>> candidates;
  candidates.reserve(population);
  for (std::size_t i = 0; i < population; ++i) {
    Rng rng(DeriveSeed(seed, "mikado.candidate", {iteration, i}));
    std::vector<bool> removed(sites.size(), false);
    for (std::size_t idx : rng.SampleIndices(sites.size(), remove)) {
      removed[idx] = true;
    }
    std::vector<PerturbationSite> kept;
    kept.reserve(sites.size() - remove);
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if (!removed[j]) kept.push_back(sites[j]);
    }
    candidates.push_back(std::move(kept));
  }
  return candidates;
}

std::vector<std::string> SanitizeCandidates(const MikadoState& state,
                                            std::size_t population,
                                            std::size_t step,
                                            std::uint64_t seed) {
  const std::u32string clean = DecodeUtf8(state.original);
  std::vector<std::string> texts;
  for (const auto& sites : SampleCandidateSites(state.sites, population, step,
                                                seed, state.iterations)) {
    texts.push_back(EncodeUtf8(ApplySites(clean, sites)));
  }
  return texts;
}

double SummarySimilarity(std::string_view clean_summary,
                         std::string_view adversarial_summary,
                         const SimilarityFn& similarity,
                         const HomoglyphTable& table) {
  const std::string ref = StripForScoring(clean_summary, table);
  const std::string cand = StripForScoring(adversarial_summary, table);
  return similarity ? similarity(ref, cand) : Bleu(ref, cand);
}

MikadoState Mikado(std::string_view text, const MikadoConfig& config,
                   const Summarizer& summarizer,
                   const SimilarityFn& similarity,
                   const HomoglyphTable& table) {
  config.Validate();
  const std::u32string clean = DecodeUtf8(text);
  if (!IsScanClean(clean, table)) {
    throw std::invalid_argument("Mikado input is not scan-clean");
  }

  MikadoState state;
  state.original = std::string(text);
  state.sites = FullObfuscationSites(clean, config.technique, table);
  state.full_site_count = state.sites.size();
  state.site_history.push_back(state.sites.size());
  state.adversarial = EncodeUtf8(ApplySites(clean, state.sites));

  const std::string clean_summary = summarizer.Summarize(state.original);
  auto measure = [&](const std::string& adversarial) {
    return SummarySimilarity(clean_summary, summarizer.Summarize(adversarial),
                             similarity, table);
  };
  state.similarity = measure(state.adversarial);

  while (state.similarity <= config.budget && !state.sites.empty() &&
         state.iterations < config.max_iterations) {
    auto candidates = SampleCandidateSites(state.sites, config.population,
                                           config.step, config.seed,
                                           state.iterations);
    ++state.iterations;
    std::size_t best = 0;
    double best_similarity = 2.0;
    std::string best_text;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::string candidate = EncodeUtf8(ApplySites(clean, candidates[i]));
      const double m = measure(candidate);
      // Strict comparison keeps the lowest index on ties.
      if (m < best_similarity) {
        best_similarity = m;
        best = i;
        best_text = std::move(candidate);
      }
    }
    if (best_similarity > config.budget) break;
    state.sites = std::move(candidates[best]);
    state.adversarial = std::move(best_text);
    state.similarity = best_similarity;
    state.site_history.push_back(state.sites.size());
  }
  state.budget_met = state.similarity <= config.budget;
  return state;
}

}  // namespace badenc
