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

#include "badenc/corpus.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "badenc/rng.h"
#include "badenc/utf8.h"
#include "json.hpp"

namespace badenc {
namespace {

using nlohmann::json;

std::string RequireString(const json& obj, const char* field,
                          std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw CorpusFormatError(std::string("missing field \"") + field + "\"",
                            line);
  }
  if (!it->is_string()) {
    throw CorpusFormatError(std::string("field \"") + field +
                                "\" must be a string",
                            line);
  }
  return it->get<std::string>();
}

template <typename Fn>
void ForEachJsonLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw CorpusFormatError(e.what(), number);
    }
    if (!obj.is_object()) {
      throw CorpusFormatError("expected a JSON object", number);
    }
    fn(obj, number);
  }
}

}  // namespace

PerturbationTechnique CopyTechnique(std::uint64_t corpus_seed,
                                    const std::string& source_id,
                                    Technique t) {
  return {t, DeriveSeed(corpus_seed, "corpus.copy",
                        {Fnv1a64(source_id), static_cast<std::uint64_t>(t)})};
}

std::vector<PerturbedDoc> BuildBadCorpus(std::span<const SourceDoc> docs,
                                         std::span<const Technique> techniques,
                                         std::uint64_t seed,
                                         const std::string& base_url,
                                         const HomoglyphTable& table) {
  std::set<std::string> ids;
  for (const SourceDoc& doc : docs) {
    if (!ids.insert(doc.id).second) {
      throw std::invalid_argument("duplicate source id: " + doc.id);
    }
    if (!Scan(doc.title, table).clean() || !Scan(doc.body, table).clean()) {
      throw std::invalid_argument("source document " + doc.id +
                                  " is not scan-clean");
    }
  }

  const std::size_t total = docs.size() * techniques.size();
  std::vector<std::size_t> numbers(total);
  for (std::size_t i = 0; i < total; ++i) numbers[i] = i + 1;
  Rng(DeriveSeed(seed, "corpus.urls")).Shuffle(numbers);

  std::vector<PerturbedDoc> out;
  out.reserve(total);
  std::size_t copy = 0;
  for (const SourceDoc& doc : docs) {
    for (Technique t : techniques) {
      const PerturbationTechnique technique = CopyTechnique(seed, doc.id, t);
      PerturbationTechnique body_technique = technique;
      body_technique.seed = DeriveSeed(technique.seed, "body");

      PerturbedDoc p;
      p.id = std::to_string(numbers[copy]);
      p.url = base_url + p.id;
      p.title = Obfuscate(doc.title, technique, table);
      p.body = t == Technique::kZwsp2 ? doc.body
                                      : Obfuscate(doc.body, body_technique, table);
      p.technique = technique;
      p.source_id = doc.id;
      out.push_back(std::move(p));
      ++copy;
    }
  }
  return out;
}

std::vector<SourceDoc> ReadSourceCorpus(std::istream& in) {
  std::vector<SourceDoc> docs;
  ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    docs.push_back({RequireString(obj, "id", line),
                    RequireString(obj, "url", line),
                    RequireString(obj, "title", line),
                    RequireString(obj, "body", line)});
  });
  return docs;
}

std::vector<SourceDoc> ReadSourceCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  return ReadSourceCorpus(in);
}

void WriteSourceCorpus(std::ostream& out, std::span<const SourceDoc> docs) {
  for (const SourceDoc& doc : docs) {
    json obj = {{"id", doc.id},
                {"url", doc.url},
                {"title", doc.title},
                {"body", doc.body}};
    out << obj.dump() << '\n';
  }
}

std::vector<PerturbedDoc> ReadPerturbedCorpus(std::istream& in) {
  std::vector<PerturbedDoc> docs;
  ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    PerturbedDoc doc;
    doc.id = RequireString(obj, "id", line);
    doc.url = RequireString(obj, "url", line);
    doc.title = RequireString(obj, "title", line);
    doc.body = RequireString(obj, "body", line);
    const std::string technique = RequireString(obj, "technique", line);
    auto kind = TryParseTechnique(technique);
    if (!kind) throw CorpusFormatError("unknown technique " + technique, line);
    doc.technique = {*kind, 0};
    if (auto it = obj.find("technique_seed"); it != obj.end()) {
      if (!it->is_number_unsigned()) {
        throw CorpusFormatError("field \"technique_seed\" must be an unsigned integer",
                                line);
      }
      doc.technique.seed = it->get<std::uint64_t>();
    }
    doc.source_id = RequireString(obj, "source_id", line);
    docs.push_back(std::move(doc));
  });
  return docs;
}

void WritePerturbedCorpus(std::ostream& out,
                          std::span<const PerturbedDoc> docs) {
  for (const PerturbedDoc& doc : docs) {
    json obj = {{"id", doc.id},
                {"url", doc.url},
                {"title", doc.title},
                {"body", doc.body},
                {"technique", TechniqueName(doc.technique.kind)},
                {"technique_seed", doc.technique.seed},
                {"source_id", doc.source_id}};
    out << obj.dump() << '\n';
  }
}

std::string CorpusFingerprint(std::span<const SourceDoc> docs) {
  std::uint64_t h = Fnv1a64("badenc.corpus");
  auto mix = [&h](std::string_view field) {
    h = Fnv1a64(std::to_string(field.size()), h);
    h = Fnv1a64(field, h);
  };
  for (const SourceDoc& doc : docs) {
    mix(doc.id);
    mix(doc.url);
    mix(doc.title);
    mix(doc.body);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace badenc
