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

#ifndef BADENC_PLAGIARISM_H_
#define BADENC_PLAGIARISM_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "badenc/perturb.h"

namespace badenc {

struct PlagiarismVerdict {
  // Fraction of candidate word n-grams found in the corpus.
  double score = 0.0;
  bool flagged = false;
  double threshold = 0.5;
  // n actually used; 1 when the candidate has fewer than n words.
  std::size_t order = 3;
};

struct PlagiarismOptions {
  std::size_t ngram = 3;
  double threshold = 0.5;
  // Sanitize candidates (and corpus texts) before matching.
  bool sanitize_first = false;
};

// Word n-gram containment checker over raw tokens.
class PlagiarismChecker {
 public:
  // Throws std::invalid_argument on an empty corpus or ngram == 0.
  PlagiarismChecker(std::vector<std::string> corpus,
                    PlagiarismOptions options = {});

  PlagiarismVerdict Check(std::string_view candidate) const;

  const PlagiarismOptions& options() const { return options_; }

 private:
  std::vector<std::string> Terms(std::string_view text) const;

  PlagiarismOptions options_;
  std::set<std::vector<std::string>> ngrams_;
  std::set<std::string> unigrams_;
};

inline PlagiarismVerdict PlagiarismCheck(std::string_view candidate,
                                         std::vector<std::string> corpus,
                                         PlagiarismOptions options = {}) {
  return PlagiarismChecker(std::move(corpus), options).Check(candidate);
}

struct EvasionRow {
  Technique technique = Technique::kBase;
  double attack_success_rate = 0.0;
  std::size_t samples = 0;
  // bksp/del rows are reported apart from the imperceptible techniques.
  bool deletion = false;
};

// Fully obfuscates every corpus text with each technique and checks it
// against the clean corpus. A sample counts as a success when it is not
// flagged.
std::vector<EvasionRow> EvasionEval(std::span<const std::string> corpus,
                                    std::span<const Technique> techniques,
                                    std::uint64_t seed,
                                    PlagiarismOptions options = {});

}  // namespace badenc

#endif  // BADENC_PLAGIARISM_H_
