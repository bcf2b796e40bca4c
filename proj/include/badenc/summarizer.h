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

#ifndef BADENC_SUMMARIZER_H_
#define BADENC_SUMMARIZER_H_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace badenc {

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  // Deterministic for a fixed input. Throws std::invalid_argument on empty
  // input.
  virtual std::string Summarize(std::string_view text) const = 0;
};

class SummarizerError : public std::runtime_error {
 public:
  SummarizerError(const std::string& what, int exit_status)
      : std::runtime_error(what), exit_status_(exit_status) {}
  int exit_status() const { return exit_status_; }

 private:
  int exit_status_;
};

inline constexpr std::size_t kDefaultSummarySentences = 3;

// Frequency-based extractive summarizer over raw tokens.
//
// Sentences end at '.', '!' or '?' followed by whitespace or end of text.
// Each token is looked up in a closed model alphabet (ASCII letters and
// digits, Latin-1 letters); a token with any other scalar is out of
// vocabulary and carries no weight, as do stopwords. A known term weighs
// tf(term) * ln(1 + S / sf(term)) where S is the sentence count and sf the
// number of sentences containing it. Sentence score is the sum over its
// tokens. The top-k positive-score sentences are returned in document order;
// if no sentence scores above zero the summary is empty.
class ExtractiveSummarizer : public Summarizer {
 public:
  explicit ExtractiveSummarizer(std::size_t sentences = kDefaultSummarySentences);

  std::string Summarize(std::string_view text) const override;

  std::size_t sentences() const { return sentences_; }

 private:
  std::size_t sentences_;
};

// Runs `command` through /bin/sh once per call with the text on standard
// input and reads the summary from standard output. A nonzero exit status
// raises SummarizerError.
class ExternalCommandSummarizer : public Summarizer {
 public:
  explicit ExternalCommandSummarizer(std::string command);

  std::string Summarize(std::string_view text) const override;

 private:
  std::string command_;
};

struct SummarizerRef {
  enum class Kind { kBuiltinExtractive, kExternalCommand };

  Kind kind = Kind::kBuiltinExtractive;
  std::size_t sentences = kDefaultSummarySentences;
  std::string command;

  std::unique_ptr<Summarizer> Make() const;
};

// Exposed for tests.
std::vector<std::string> SplitSentences(std::string_view text);
bool IsModelVocabularyToken(std::string_view token);

}  // namespace badenc

#endif  // BADENC_SUMMARIZER_H_
