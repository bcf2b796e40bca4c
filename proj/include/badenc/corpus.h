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

#ifndef BADENC_CORPUS_H_
#define BADENC_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "badenc/perturb.h"

namespace badenc {

struct SourceDoc {
  std::string id;
  std::string url;
  std::string title;
  std::string body;

  bool operator==(const SourceDoc&) const = default;
};

struct PerturbedDoc {
  std::string id;
  std::string url;
  std::string title;
  std::string body;
  PerturbationTechnique technique;
  std::string source_id;

  bool operator==(const PerturbedDoc&) const = default;
};

inline constexpr char kDefaultMirrorBaseUrl[] = "https://bad-search.wiki/a/";

class CorpusFormatError : public std::runtime_error {
 public:
  CorpusFormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Builds the perturbed mirror: one copy of every document per technique, in
// (document, technique) order. Copy URLs are `base_url` plus a seeded,
// shuffled copy number, so neither the article nor the technique can be read
// off the URL. zwsp2 copies perturb the title only.
std::vector<PerturbedDoc> BuildBadCorpus(
    std::span<const SourceDoc> docs,
    std::span<const Technique> techniques, std::uint64_t seed,
    const std::string& base_url = kDefaultMirrorBaseUrl,
    const HomoglyphTable& table = HomoglyphTable::Default());

// Seed used for a given copy; exposed so experiments can reproduce a copy's
// perturbation.
PerturbationTechnique CopyTechnique(std::uint64_t corpus_seed,
                                    const std::string& source_id,
                                    Technique t);

// JSONL, one object per line with string fields id, url, title, body.
// Blank lines are skipped.
std::vector<SourceDoc> ReadSourceCorpus(std::istream& in);
std::vector<SourceDoc> ReadSourceCorpusFile(const std::string& path);
void WriteSourceCorpus(std::ostream& out, std::span<const SourceDoc> docs);

// Source schema plus `technique` and `source_id`.
std::vector<PerturbedDoc> ReadPerturbedCorpus(std::istream& in);
void WritePerturbedCorpus(std::ostream& out,
                          std::span<const PerturbedDoc> docs);

// Order-sensitive content hash of a corpus, hex encoded.
std::string CorpusFingerprint(std::span<const SourceDoc> docs);

}  // namespace badenc

#endif  // BADENC_CORPUS_H_
