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

#include <gtest/gtest.h>

#include "badenc/metrics.h"
#include "badenc/sanitize.h"
#include "badenc/utf8.h"
#include "support/fixtures.h"

namespace badenc {
namespace {

std::string LongDoc(std::uint64_t seed) {
  return testing::SyntheticCorpus(1, seed, 22)[0].body;
}

// Returns the text itself, so similarity tracks how much is left perturbed.
class IdentitySummarizer : public Summarizer {
 public:
  std::string Summarize(std::string_view text) const override {
    return std::string(text);
  }
};

TEST(MikadoConfigTest, Validation) {
  MikadoConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.population = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.step = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.budget = 1.5;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config = {};
  config.technique.kind = Technique::kRlo;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
  config.allow_bidi = true;
  EXPECT_NO_THROW(config.Validate());
  config.technique.kind = Technique::kZwsp2;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
}

TEST(SampleCandidateSitesTest, RemovesStepSitesPerCandidate) {
  const auto sites =
      FullObfuscationSites(DecodeUtf8("candidate site sampling"), {Technique::kZwsp, 0});
  const auto candidates = SampleCandidateSites(sites, 5, 4, 9, 0);
  ASSERT_EQ(candidates.size(), 5u);
  for (const auto& c : candidates) {
    EXPECT_EQ(c.size(), sites.size() - 4);
    // Survivors keep their original order.
    std::size_t j = 0;
    for (const auto& s : sites) {
      if (j < c.size() && c[j] == s) ++j;
    }
    EXPECT_EQ(j, c.size());
  }
  EXPECT_EQ(SampleCandidateSites(sites, 5, 4, 9, 0), candidates);
  EXPECT_NE(SampleCandidateSites(sites, 5, 4, 9, 1), candidates);
  for (const auto& c : SampleCandidateSites(sites, 3, 1000, 9, 0)) {
    EXPECT_TRUE(c.empty());
  }
}

TEST(MikadoTest, ShrinksSitesWithinBudget) {
  const std::string doc = LongDoc(1);
  ASSERT_GE(doc.size(), 1500u);
  const ExtractiveSummarizer summarizer;
  MikadoConfig config;
  config.seed = 4;
  const MikadoState state = Mikado(doc, config, summarizer);
  EXPECT_TRUE(state.budget_met);
  EXPECT_LE(state.similarity, 0.1);
  EXPECT_LT(state.sites.size(), state.full_site_count);
  ASSERT_GE(state.site_history.size(), 2u);
  EXPECT_EQ(state.site_history.front(), state.full_site_count);
  EXPECT_EQ(state.site_history.back(), state.sites.size());
  for (std::size_t i = 1; i < state.site_history.size(); ++i) {
    EXPECT_LT(state.site_history[i], state.site_history[i - 1]);
  }
  EXPECT_EQ(Sanitize(state.adversarial), doc);
  EXPECT_EQ(EncodeUtf8(ApplySites(DecodeUtf8(doc), state.sites)), state.adversarial);
  EXPECT_DOUBLE_EQ(SummarySimilarity(summarizer.Summarize(doc),
                                     summarizer.Summarize(state.adversarial)),
                   state.similarity);
}

TEST(MikadoTest, DeterministicForSeed) {
  const std::string doc = LongDoc(2);
  const ExtractiveSummarizer summarizer;
  MikadoConfig config;
  config.technique = {Technique::kHomo, 3};
  config.seed = 8;
  const MikadoState a = Mikado(doc, config, summarizer);
  const MikadoState b = Mikado(doc, config, summarizer);
  EXPECT_EQ(a.adversarial, b.adversarial);
  EXPECT_EQ(a.site_history, b.site_history);
}

TEST(MikadoTest, BudgetNotMetLeavesFullObfuscation) {
  const IdentitySummarizer identity;
  MikadoConfig config;
  config.budget = 0.0;
  const std::string doc = "short text here";
  const MikadoState state = Mikado(doc, config, identity, Chrf);
  // Stripping makes the identity summary match exactly, so m = 1.
  EXPECT_FALSE(state.budget_met);
  EXPECT_EQ(state.iterations, 0u);
  EXPECT_EQ(state.sites.size(), state.full_site_count);
  EXPECT_EQ(state.site_history.size(), 1u);
}

TEST(MikadoTest, StopsWhenNoCandidateFits) {
  // Budget 0 with a summarizer that never reads perturbed text: every
  // candidate still scores 0 until the sites run out.
  const ExtractiveSummarizer summarizer;
  MikadoConfig config;
  config.budget = 0.0;
  config.step = 400;
  const MikadoState state = Mikado(LongDoc(5), config, summarizer);
  EXPECT_TRUE(state.budget_met);
  EXPECT_EQ(state.similarity, 0.0);
  EXPECT_GT(state.sites.size(), 0u);
}

TEST(MikadoTest, MaxIterationsCap) {
  const ExtractiveSummarizer summarizer;
  MikadoConfig config;
  config.step = 1;
  config.population = 2;
  config.max_iterations = 3;
  const MikadoState state = Mikado(LongDoc(6), config, summarizer);
  EXPECT_EQ(state.iterations, 3u);
  EXPECT_EQ(state.sites.size(), state.full_site_count - 3);
}

TEST(MikadoTest, RejectsUncleanInput) {
  const ExtractiveSummarizer summarizer;
  EXPECT_THROW(Mikado("a\xE2\x80\x8B" "b", MikadoConfig{}, summarizer),
               std::invalid_argument);
}

TEST(SanitizeCandidatesTest, CandidatesSanitizeToOriginal) {
  MikadoState state;
  state.original = "every candidate sanitizes back";
  state.sites = FullObfuscationSites(DecodeUtf8(state.original), {Technique::kDel, 0});
  for (const std::string& c : SanitizeCandidates(state, 4, 6, 1)) {
    EXPECT_EQ(Sanitize(c), state.original);
  }
}

TEST(SummarySimilarityTest, StripsBeforeScoring) {
  EXPECT_EQ(SummarySimilarity("the cat sat", "the c\xE2\x80\x8B" "at sat"), 1.0);
  EXPECT_EQ(SummarySimilarity("the cat sat", ""), 0.0);
  EXPECT_EQ(SummarySimilarity("abc", "abd", Chrf), Chrf("abc", "abd"));
}

}  // namespace
}  // namespace badenc
