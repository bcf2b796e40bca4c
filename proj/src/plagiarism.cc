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

#include "badenc/plagiarism.h"

#include <stdexcept>

#include "badenc/metrics.h"
#include "badenc/minisearch.h"
#include "badenc/rng.h"
#include "badenc/sanitize.h"

namespace badenc {

PlagiarismChecker::PlagiarismChecker(std::vector<std::string> corpus,
                                     PlagiarismOptions options)
    : options_(options) {
  if (corpus.empty()) throw std::invalid_argument("plagiarism corpus is empty");
  if (options_.ngram == 0) throw std::invalid_argument("ngram must be positive");
  for (const std::string& text : corpus) {
    const std::vector<std::string> terms = Terms(text);
    unigrams_.insert(terms.begin(), terms.end());
    for (std::size_t i = 0; i + options_.ngram <= terms.size(); ++i) {
      ngrams_.emplace(terms.begin() + static_cast<std::ptrdiff_t>(i),
                      terms.begin() + static_cast<std::ptrdiff_t>(i + options_.ngram));
    }
  }
}

std::vector<std::string> PlagiarismChecker::Terms(std::string_view text) const {
  if (options_.sanitize_first) {
    return Tokenize(Sanitize(text), AnalyzerMode::kVulnerable);
  }
  return Tokenize(text, AnalyzerMode::kVulnerable);
}

PlagiarismVerdict PlagiarismChecker::Check(std::string_view candidate) const {
  PlagiarismVerdict verdict;
  verdict.threshold = options_.threshold;
  const std::vector<std::string> terms = Terms(candidate);
  std::size_t total = 0;
  std::size_t found = 0;
  if (terms.size() >= options_.ngram) {
    verdict.order = options_.ngram;
    for (std::size_t i = 0; i + options_.ngram <= terms.size(); ++i) {
      std::vector<std::string> gram(
          terms.begin() + static_cast<std::ptrdiff_t>(i),
          terms.begin() + static_cast<std::ptrdiff_t>(i + options_.ngram));
      ++total;
      found += ngrams_.count(gram);
    }
  } else {
    verdict.order = 1;
    for (const std::string& t : terms) {
      ++total;
      found += unigrams_.count(t);
    }
  }
  verdict.score = total == 0 ? 0.0 : static_cast<double>(found) / total;
  verdict.flagged = verdict.score >= options_.threshold;
  return verdict;
}

std::vector<EvasionRow> EvasionEval(std::span<const std::string> corpus,
                                    std::span<const Technique> techniques,
                                    std::uint64_t seed,
                                    PlagiarismOptions options) {
  if (corpus.empty()) throw std::invalid_argument("evasion corpus is empty");
  const PlagiarismChecker checker(
      std::vector<std::string>(corpus.begin(), corpus.end()), options);
  std::vector<EvasionRow> rows;
  for (Technique t : techniques) {
    std::vector<bool> fooled;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const PerturbationTechnique technique{
          t, DeriveSeed(seed, "evasion", {i, static_cast<std::uint64_t>(t)})};
      fooled.push_back(!checker.Check(Obfuscate(corpus[i], technique)).flagged);
    }
    rows.push_back({t, AttackSuccessRate(fooled), fooled.size(),
                    t == Technique::kBksp || t == Technique::kDel});
  }
  return rows;
}

}  // namespace badenc
