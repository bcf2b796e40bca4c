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

#include "badenc/minisearch.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "badenc/sanitize.h"
#include "badenc/utf8.h"
#include "json.hpp"

namespace badenc {
namespace {

bool IsSeparator(char32_t c) {
  if (c < 0x80) {
    if (c == kBackspace || c == kDelete) return false;
    if (c < 0x20) return true;
    if (c == U' ') return true;
    const bool alnum = (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
                       (c >= U'A' && c <= U'Z');
    return !alnum && c != U'_';
  }
  switch (c) {
    case 0x00A0: case 0x00A1: case 0x00AB: case 0x00BB: case 0x00BF:
    case 0x1680: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
    case 0x3000: case 0x3001: case 0x3002:
      return true;
    default:
      break;
  }
  if (c >= 0x2000 && c <= 0x200A) return true;  // spaces
  if (c >= 0x2010 && c <= 0x2027) return true;  // dashes, quotes, ellipsis
  if (c >= 0x2030 && c <= 0x205E) return true;
  return false;
}

char32_t FoldAscii(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
}

std::string IndexLine(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("truncated index");
  return line;
}

}  // namespace

std::string_view AnalyzerModeName(AnalyzerMode mode) {
  return mode == AnalyzerMode::kVulnerable ? "vulnerable" : "defended";
}

AnalyzerMode ParseAnalyzerMode(std::string_view name) {
  if (name == "vulnerable") return AnalyzerMode::kVulnerable;
  if (name == "defended") return AnalyzerMode::kDefended;
  throw std::invalid_argument("unknown analyzer mode: " + std::string(name));
}

std::vector<std::string> Tokenize(std::string_view text, AnalyzerMode mode,
                                  const HomoglyphTable& table) {
  std::u32string scalars = DecodeUtf8(text);
  if (mode == AnalyzerMode::kDefended) scalars = Sanitize(scalars, table);
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t c : scalars) {
    if (IsSeparator(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    AppendUtf8(FoldAscii(c), current);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> Serp::Urls() const {
  std::vector<std::string> urls;
  urls.reserve(results.size());
  for (const SerpResult& r : results) urls.push_back(r.url);
  return urls;
}

bool Serp::Contains(std::string_view url) const {
  return std::any_of(results.begin(), results.end(),
                     [&](const SerpResult& r) { return r.url == url; });
}

std::string Serp::ToJson() const {
  nlohmann::json doc;
  doc["query"] = query;
  doc["size"] = size;
  doc["results"] = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    doc["results"].push_back({{"url", results[i].url},
                              {"rank", i + 1},
                              {"score", results[i].score}});
  }
  return doc.dump();
}

Index::Index(AnalyzerMode mode, Bm25Params params, const HomoglyphTable& table)
    : mode_(mode), params_(params), table_(&table) {}

void Index::Add(const std::string& id, const std::string& url,
                const std::string& title, const std::string& body) {
  if (ids_.contains(id)) {
    throw std::invalid_argument("duplicate document id: " + id);
  }
  // Title and body are tokenized separately so a bidi wrap or deletion pair
  // never spans the two fields.
  std::vector<std::string> tokens = Tokenize(title, mode_, *table_);
  for (std::string& t : Tokenize(body, mode_, *table_)) {
    tokens.push_back(std::move(t));
  }
  const auto ordinal = static_cast<std::uint32_t>(docs_.size());
  std::map<std::string, std::uint32_t> counts;
  for (const std::string& t : tokens) ++counts[t];
  for (const auto& [term, tf] : counts) {
    postings_[term].push_back({ordinal, tf});
  }
  ids_.emplace(id, docs_.size());
  docs_.push_back({id, url, title, body, tokens.size()});
  total_length_ += tokens.size();
}

Serp Index::Search(std::string_view query, std::size_t size) const {
  Serp serp;
  serp.query = std::string(query);
  serp.size = size;
  if (docs_.empty() || size == 0) return serp;

  std::vector<std::string> terms;
  for (std::string& t : Tokenize(query, mode_, *table_)) {
    if (std::find(terms.begin(), terms.end(), t) == terms.end()) {
      terms.push_back(std::move(t));
    }
  }
  if (terms.empty()) return serp;

  const double n = static_cast<double>(docs_.size());
  const double avg_length =
      std::max(1.0, static_cast<double>(total_length_) / n);
  std::vector<double> scores(docs_.size(), 0.0);
  std::vector<bool> matched(docs_.size(), false);
  for (const std::string& term : terms) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double df = static_cast<double>(it->second.size());
    const double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
    for (const Posting& p : it->second) {
      const double tf = p.tf;
      const double norm =
          1.0 - params_.b +
          params_.b * static_cast<double>(docs_[p.doc].length) / avg_length;
      scores[p.doc] += idf * tf * (params_.k1 + 1.0) / (tf + params_.k1 * norm);
      matched[p.doc] = true;
    }
  }

  std::vector<std::uint32_t> hits;
  for (std::uint32_t d = 0; d < docs_.size(); ++d) {
    if (matched[d]) hits.push_back(d);
  }
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  };
  const std::size_t keep = std::min(size, hits.size());
  std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(keep),
                    hits.end(), better);
  for (std::size_t i = 0; i < keep; ++i) {
    serp.results.push_back({docs_[hits[i]].url, scores[hits[i]]});
  }
  return serp;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Index::PostingsOf(
    const std::string& term) const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  auto it = postings_.find(term);
  if (it == postings_.end()) return out;
  for (const Posting& p : it->second) out.emplace_back(p.doc, p.tf);
  return out;
}

void Index::Save(std::ostream& out) const {
  std::ostringstream header;
  header.precision(17);
  header << "badenc-index 1 " << AnalyzerModeName(mode_) << ' ' << params_.k1
         << ' ' << params_.b << ' ' << docs_.size() << '\n';
  out << header.str();
  for (const Doc& d : docs_) {
    for (const std::string* field : {&d.id, &d.url, &d.title, &d.body}) {
      out << field->size() << '\n' << *field << '\n';
    }
  }
}

void Index::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write index " + path);
  Save(out);
  if (!out) throw std::runtime_error("failed writing index " + path);
}

Index Index::Load(std::istream& in, const HomoglyphTable& table) {
  std::istringstream header(IndexLine(in));
  std::string magic, mode;
  int version = 0;
  Bm25Params params;
  std::size_t count = 0;
  header >> magic >> version >> mode >> params.k1 >> params.b >> count;
  if (!header || magic != "badenc-index" || version != 1) {
    throw std::runtime_error("not a badenc index file");
  }
  Index index(ParseAnalyzerMode(mode), params, table);
  auto read_field = [&in]() {
    const std::size_t length = std::stoull(IndexLine(in));
    std::string value(length, '\0');
    in.read(value.data(), static_cast<std::streamsize>(length));
    if (in.gcount() != static_cast<std::streamsize>(length) || in.get() != '\n') {
      throw std::runtime_error("truncated index");
    }
    return value;
  };
  for (std::size_t i = 0; i < count; ++i) {
    std::string id = read_field();
    std::string url = read_field();
    std::string title = read_field();
    std::string body = read_field();
    index.Add(id, url, title, body);
  }
  return index;
}

Index Index::LoadFile(const std::string& path, const HomoglyphTable& table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index " + path);
  return Index::Load(in, table);
}

}  // namespace badenc
