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

#ifndef BADENC_EXPERIMENTS_H_
#define BADENC_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "badenc/corpus.h"
#include "badenc/mikado.h"
#include "badenc/minisearch.h"
#include "badenc/plagiarism.h"

namespace badenc {

struct ReportRow {
  std::string technique;
  // Injection count for disruption sweeps.
  std::optional<std::size_t> k;
  // Mean over non-null samples; absent when every sample was null.
  std::optional<double> mean;
  std::size_t count = 0;
  std::size_t nulls = 0;

  bool operator==(const ReportRow&) const = default;
};

struct ReportSample {
  std::string technique;
  std::optional<std::size_t> k;
  std::string query_id;
  std::optional<double> value;
  // Why `value` is null, when it is.
  std::string error;

  bool operator==(const ReportSample&) const = default;
};

struct ExperimentReport {
  std::string experiment;
  std::string engine;
  std::uint64_t seed = 0;
  std::string corpus_fingerprint;
  std::vector<ReportRow> rows;
  std::vector<ReportSample> samples;

  bool operator==(const ExperimentReport&) const = default;

  // Pretty-printed JSON with sorted keys and an embedded content_hash.
  std::string ToJson() const;
  static ExperimentReport FromJson(std::string_view json);
  // One line per row: experiment,engine,technique,k,mean,count,nulls.
  std::string ToCsv() const;
  std::string ContentHash() const;
};

enum class ReportFormat { kJson, kCsv };

// Throws std::runtime_error when the path cannot be written.
void WriteReport(const ExperimentReport& report, const std::string& path,
                 ReportFormat format);

struct EngineSpec {
  enum class Kind { kLocal, kRemote };

  Kind kind = Kind::kLocal;
  AnalyzerMode mode = AnalyzerMode::kVulnerable;
  Bm25Params bm25;
  std::string endpoint;

  // "local-vulnerable", "local-defended" or "remote:<endpoint>".
  std::string Name() const;
};

struct ExperimentOptions {
  EngineSpec engine;
  std::size_t serp_size = kDefaultSerpSize;
  std::uint64_t seed = 0;
  std::string base_url = kDefaultMirrorBaseUrl;
  const HomoglyphTable* table = &HomoglyphTable::Default();
};

// Local engines index `docs`; remote engines are assumed to hold them
// already.
std::unique_ptr<SearchEngine> MakeEngine(const EngineSpec& spec,
                                         std::span<const PerturbedDoc> docs,
                                         const HomoglyphTable& table);

inline constexpr std::size_t kDefaultSweepKs[] = {1, 3, 5, 7, 9};

// Per technique, indexes only that technique's copies and queries every
// unperturbed title, scoring Hiding against the copy's URL.
ExperimentReport RunHiding(std::span<const SourceDoc> corpus,
                           std::span<const Technique> techniques,
                           const ExperimentOptions& options);

// Indexes every technique copy together and queries each copy's perturbed
// title, scoring Surfacing against that copy's URL.
ExperimentReport RunSurfacing(std::span<const SourceDoc> corpus,
                              std::span<const Technique> techniques,
                              const ExperimentOptions& options);

// Indexes the clean corpus and compares the Serp of each query with the Serp
// of its k-site injection. k = 0 is the unperturbed control. Sites for a
// query are nested across k. rlo wraps one seeded word regardless of k.
ExperimentReport RunDisruptionSweep(std::span<const SourceDoc> corpus,
                                    std::span<const std::string> queries,
                                    std::span<const Technique> techniques,
                                    std::span<const std::size_t> ks,
                                    const ExperimentOptions& options);

// Plagiarism evasion; rows hold attack success rates.
ExperimentReport RunEvasion(std::span<const std::string> texts,
                            std::span<const Technique> techniques,
                            std::uint64_t seed,
                            const PlagiarismOptions& options);

// Mikado over every text and technique; rows hold mean final similarity.
ExperimentReport RunMikadoCampaign(std::span<const std::string> texts,
                                   std::span<const Technique> techniques,
                                   const MikadoConfig& config,
                                   const Summarizer& summarizer);

}  // namespace badenc

#endif  // BADENC_EXPERIMENTS_H_
