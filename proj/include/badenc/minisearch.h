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

#ifndef BADENC_MINISEARCH_H_
#define BADENC_MINISEARCH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "badenc/corpus.h"
#include "badenc/unicode_core.h"

namespace badenc {

enum class AnalyzerMode {
  // Tokens keep format and control characters byte-for-byte.
  kVulnerable,
  // Documents and queries are sanitized before tokenizing.
  kDefended,
};

std::string_view AnalyzerModeName(AnalyzerMode mode);
AnalyzerMode ParseAnalyzerMode(std::string_view name);

// Splits at whitespace and punctuation and folds ASCII letters to lower case.
// Invisible, bidi, and deletion characters are word characters here, which is
// what lets a perturbed token differ from its clean spelling.
std::vector<std::string> Tokenize(
    std::string_view text, AnalyzerMode mode,
    const HomoglyphTable& table = HomoglyphTable::Default());

inline constexpr std::size_t kDefaultSerpSize = 10;

struct SerpResult {
  std::string url;
  double score = 0.0;

  bool operator==(const SerpResult&) const = default;
};

// Ranked result URLs for one query. Scores are non-increasing.
struct Serp {
  std::string query;
  std::vector<SerpResult> results;
  std::size_t size = kDefaultSerpSize;

  std::vector<std::string> Urls() const;
  bool Contains(std::string_view url) const;
  bool operator==(const Serp&) const = default;

  // {"query", "size", "results": [{"url", "rank", "score"}]}
  std::string ToJson() const;
};

class SearchEngine {
 public:
  virtual ~SearchEngine() = default;
  virtual Serp Search(std::string_view query,
                      std::size_t size = kDefaultSerpSize) const = 0;
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

// In-memory inverted index with BM25 ranking. Build with Add from a single
// thread; after that, concurrent Search calls are safe.
class Index : public SearchEngine {
 public:
  explicit Index(AnalyzerMode mode, Bm25Params params = {},
                 const HomoglyphTable& table = HomoglyphTable::Default());

  // Throws std::invalid_argument on a duplicate id.
  void Add(const std::string& id, const std::string& url,
           const std::string& title, const std::string& body);
  void Add(const SourceDoc& doc) { Add(doc.id, doc.url, doc.title, doc.body); }
  void Add(const PerturbedDoc& doc) {
    Add(doc.id, doc.url, doc.title, doc.body);
  }

  // Top `size` documents sharing at least one term with the query. Ties go
  // to the earlier-added document. An empty query yields an empty Serp.
  Serp Search(std::string_view query,
              std::size_t size = kDefaultSerpSize) const override;

  std::size_t doc_count() const { return docs_.size(); }
  AnalyzerMode mode() const { return mode_; }
  const Bm25Params& params() const { return params_; }
  bool ContainsId(const std::string& id) const { return ids_.contains(id); }
  std::size_t DocLength(std::size_t doc) const { return docs_[doc].length; }
  // Postings of a term as (doc ordinal, term frequency), by ordinal.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> PostingsOf(
      const std::string& term) const;

  // Stores the documents and settings; postings are rebuilt on load.
  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static Index Load(std::istream& in,
                    const HomoglyphTable& table = HomoglyphTable::Default());
  static Index LoadFile(const std::string& path,
                        const HomoglyphTable& table = HomoglyphTable::Default());

 private:
  struct Posting {
    std::uint32_t doc;
    std::uint32_t tf;
  };
  struct Doc {
    std::string id;
    std::string url;
    std::string title;
    std::string body;
    std::size_t length;
  };

  AnalyzerMode mode_;
  Bm25Params params_;
  const HomoglyphTable* table_;
  std::vector<Doc> docs_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::size_t total_length_ = 0;
};

}  // namespace badenc

#endif  // BADENC_MINISEARCH_H_
