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

#include "badenc/summarizer.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "badenc/minisearch.h"
#include "badenc/utf8.h"

namespace badenc {
namespace {

constexpr std::array<std::string_view, 48> kStopwords = {
    "a",     "an",    "and",   "are",  "as",    "at",    "be",   "been",
    "but",   "by",    "can",   "could", "did",  "do",    "for",  "from",
    "had",   "has",   "have",  "he",   "her",   "his",   "i",    "if",
    "in",    "into",  "is",    "it",   "its",   "of",    "on",   "or",
    "she",   "so",    "that",  "the",  "their", "them",  "they", "this",
    "to",    "was",   "we",    "were", "which", "will",  "with", "you",
};

bool IsStopword(std::string_view token) {
  return std::find(kStopwords.begin(), kStopwords.end(), token) !=
         kStopwords.end();
}

bool IsModelScalar(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
      (c >= U'0' && c <= U'9') || c == U'_') {
    return true;
  }
  return c >= 0x00C0 && c <= 0x00FF && c != 0x00D7 && c != 0x00F7;
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f';
}

bool IsTerminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool IsCloser(char32_t c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == 0x201D ||
         c == 0x2019;
}

std::string Trim(std::u32string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && IsSpace(s[begin])) ++begin;
  while (end > begin && IsSpace(s[end - 1])) --end;
  return EncodeUtf8(s.substr(begin, end - begin));
}

}  // namespace

std::vector<std::string> SplitSentences(std::string_view text) {
  const std::u32string scalars = DecodeUtf8(text);
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < scalars.size()) {
    if (!IsTerminal(scalars[i])) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < scalars.size() && (IsTerminal(scalars[end]) || IsCloser(scalars[end]))) {
      ++end;
    }
    if (end == scalars.size() || IsSpace(scalars[end])) {
      std::string sentence = Trim(std::u32string_view(scalars).substr(start, end - start));
      if (!sentence.empty()) sentences.push_back(std::move(sentence));
      start = end;
    }
    i = end;
  }
  std::string tail = Trim(std::u32string_view(scalars).substr(start));
  if (!tail.empty()) sentences.push_back(std::move(tail));
  return sentences;
}

bool IsModelVocabularyToken(std::string_view token) {
  const std::u32string scalars = DecodeUtf8(token);
  return !scalars.empty() &&
         std::all_of(scalars.begin(), scalars.end(), IsModelScalar);
}

ExtractiveSummarizer::ExtractiveSummarizer(std::size_t sentences)
    : sentences_(sentences) {
  if (sentences_ == 0) {
    throw std::invalid_argument("summary sentence count must be positive");
  }
}

std::string ExtractiveSummarizer::Summarize(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("cannot summarize empty text");
  const std::vector<std::string> sentences = SplitSentences(text);

  std::vector<std::vector<std::string>> terms(sentences.size());
  std::map<std::string, int> tf;
  std::map<std::string, int> sf;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    std::set<std::string> seen;
    for (std::string& token : Tokenize(sentences[s], AnalyzerMode::kVulnerable)) {
      if (!IsModelVocabularyToken(token) || IsStopword(token)) continue;
      ++tf[token];
      if (seen.insert(token).second) ++sf[token];
      terms[s].push_back(std::move(token));
    }
  }

  const double count = static_cast<double>(sentences.size());
  std::vector<double> scores(sentences.size(), 0.0);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (const std::string& term : terms[s]) {
      scores[s] += tf[term] * std::log(1.0 + count / sf[term]);
    }
  }

  std::vector<std::size_t> ranked;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (scores[s] > 0.0) ranked.push_back(s);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  if (ranked.size() > sentences_) ranked.resize(sentences_);
  std::sort(ranked.begin(), ranked.end());

  std::string summary;
  for (std::size_t s : ranked) {
    if (!summary.empty()) summary.push_back(' ');
    summary += sentences[s];
  }
  return summary;
}

ExternalCommandSummarizer::ExternalCommandSummarizer(std::string command)
    : command_(std::move(command)) {
  if (command_.empty()) {
    throw std::invalid_argument("external summarizer command is empty");
  }
}

std::string ExternalCommandSummarizer::Summarize(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("cannot summarize empty text");
  // Each call gets its own input file and process.
  std::string input_path =
      (std::filesystem::temp_directory_path() / "badenc-sum-XXXXXX").string();
  const int fd = ::mkstemp(input_path.data());
  if (fd < 0) throw SummarizerError("cannot create summarizer input file", -1);
  ::close(fd);
  struct Cleanup {
    std::string path;
    ~Cleanup() { std::remove(path.c_str()); }
  } cleanup{input_path};
  {
    std::ofstream out(input_path, std::ios::binary);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw SummarizerError("cannot write summarizer input", -1);
  }

  const std::string shell = "(" + command_ + ") < '" + input_path + "'";
  FILE* pipe = ::popen(shell.c_str(), "r");
  if (pipe == nullptr) throw SummarizerError("cannot start summarizer", -1);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    output.append(buf.data(), n);
  }
  const int status = ::pclose(pipe);
  const int exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (exit_status != 0) {
    throw SummarizerError("summarizer command exited with status " +
                              std::to_string(exit_status),
                          exit_status);
  }
  if (!IsValidUtf8(output)) {
    throw SummarizerError("summarizer produced invalid UTF-8", 0);
  }
  while (!output.empty() && (output.back() == '\n' || output.back() == '\r')) {
    output.pop_back();
  }
  return output;
}

std::unique_ptr<Summarizer> SummarizerRef::Make() const {
  if (kind == Kind::kExternalCommand) {
    return std::make_unique<ExternalCommandSummarizer>(command);
  }
  return std::make_unique<ExtractiveSummarizer>(sentences);
}

}  // namespace badenc
