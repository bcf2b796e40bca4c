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

#include "badenc/experiments.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "badenc/metrics.h"
#include "badenc/remote.h"
#include "badenc/rng.h"
#include "json.hpp"

namespace badenc {
namespace {

using nlohmann::json;

std::string FormatDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

json OptionalSize(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json OptionalDouble(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<std::size_t> ReadOptionalSize(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

std::optional<double> ReadOptionalDouble(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json BodyJson(const ExperimentReport& r) {
  json doc;
  doc["experiment"] = r.experiment;
  doc["engine"] = r.engine;
  doc["seed"] = r.seed;
  doc["corpus_fingerprint"] = r.corpus_fingerprint;
  doc["rows"] = json::array();
  for (const ReportRow& row : r.rows) {
    doc["rows"].push_back({{"technique", row.technique},
                           {"k", OptionalSize(row.k)},
                           {"mean", OptionalDouble(row.mean)},
                           {"count", row.count},
                           {"nulls", row.nulls}});
  }
  doc["samples"] = json::array();
  for (const ReportSample& s : r.samples) {
    doc["samples"].push_back({{"technique", s.technique},
                              {"k", OptionalSize(s.k)},
                              {"query_id", s.query_id},
                              {"value", OptionalDouble(s.value)},
                              {"error", s.error}});
  }
  return doc;
}

// Accumulates samples for one row, in insertion order.
class RowBuilder {
 public:
  RowBuilder(ExperimentReport& report, std::string technique,
             std::optional<std::size_t> k)
      : report_(report), technique_(std::move(technique)), k_(k) {}

  void Add(std::string query_id, std::optional<double> value,
           std::string error = {}) {
    if (value) {
      sum_ += *value;
      ++count_;
    } else {
      ++nulls_;
    }
    report_.samples.push_back(
        {technique_, k_, std::move(query_id), value, std::move(error)});
  }

  void Finish() {
    ReportRow row{technique_, k_, std::nullopt, count_, nulls_};
    if (count_ > 0) row.mean = sum_ / static_cast<double>(count_);
    report_.rows.push_back(std::move(row));
  }

 private:
  ExperimentReport& report_;
  std::string technique_;
  std::optional<std::size_t> k_;
  double sum_ = 0.0;
  std::size_t count_ = 0;
  std::size_t nulls_ = 0;
};

// Remote failures become null samples carrying the cause.
template <typename Fn>
void Measure(RowBuilder& row, const std::string& query_id, Fn&& fn) {
  try {
    row.Add(query_id, fn());
  } catch (const RemoteError& e) {
    row.Add(query_id, std::nullopt, e.what());
  }
}

ExperimentReport NewReport(std::string name, const ExperimentOptions& options,
                           std::span<const SourceDoc> corpus) {
  ExperimentReport report;
  report.experiment = std::move(name);
  report.engine = options.engine.Name();
  report.seed = options.seed;
  report.corpus_fingerprint = CorpusFingerprint(corpus);
  return report;
}

std::string TextsFingerprint(std::span<const std::string> texts) {
  std::vector<SourceDoc> docs;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    docs.push_back({std::to_string(i), "", "", texts[i]});
  }
  return CorpusFingerprint(docs);
}

}  // namespace

std::string ExperimentReport::ContentHash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(BodyJson(*this).dump())));
  return buf;
}

std::string ExperimentReport::ToJson() const {
  json doc = BodyJson(*this);
  doc["content_hash"] = ContentHash();
  return doc.dump(2) + "\n";
}

ExperimentReport ExperimentReport::FromJson(std::string_view text) {
  ExperimentReport r;
  json doc;
  try {
    doc = json::parse(text);
    r.experiment = doc.at("experiment").get<std::string>();
    r.engine = doc.at("engine").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.corpus_fingerprint = doc.at("corpus_fingerprint").get<std::string>();
    for (const json& row : doc.at("rows")) {
      r.rows.push_back({row.at("technique").get<std::string>(),
                        ReadOptionalSize(row.at("k")),
                        ReadOptionalDouble(row.at("mean")),
                        row.at("count").get<std::size_t>(),
                        row.at("nulls").get<std::size_t>()});
    }
    for (const json& s : doc.at("samples")) {
      r.samples.push_back({s.at("technique").get<std::string>(),
                           ReadOptionalSize(s.at("k")),
                           s.at("query_id").get<std::string>(),
                           ReadOptionalDouble(s.at("value")),
                           s.at("error").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  if (doc.contains("content_hash") &&
      doc["content_hash"] != r.ContentHash()) {
    throw std::runtime_error("report content_hash does not match its contents");
  }
  return r;
}

std::string ExperimentReport::ToCsv() const {
  std::ostringstream out;
  out << "experiment,engine,technique,k,mean,count,nulls\n";
  for (const ReportRow& row : rows) {
    out << experiment << ',' << engine << ',' << row.technique << ','
        << (row.k ? std::to_string(*row.k) : "") << ','
        << (row.mean ? FormatDouble(*row.mean) : "") << ',' << row.count << ','
        << row.nulls << '\n';
  }
  return out.str();
}

void WriteReport(const ExperimentReport& report, const std::string& path,
                 ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report " + path);
  out << (format == ReportFormat::kJson ? report.ToJson() : report.ToCsv());
  if (!out) throw std::runtime_error("failed writing report " + path);
}

std::string EngineSpec::Name() const {
  if (kind == Kind::kRemote) return "remote:" + endpoint;
  return "local-" + std::string(AnalyzerModeName(mode));
}

std::unique_ptr<SearchEngine> MakeEngine(const EngineSpec& spec,
                                         std::span<const PerturbedDoc> docs,
                                         const HomoglyphTable& table) {
  if (spec.kind == EngineSpec::Kind::kRemote) {
    return std::make_unique<RemoteEngine>(spec.endpoint);
  }
  auto index = std::make_unique<Index>(spec.mode, spec.bm25, table);
  for (const PerturbedDoc& doc : docs) index->Add(doc);
  return index;
}

ExperimentReport RunHiding(std::span<const SourceDoc> corpus,
                           std::span<const Technique> techniques,
                           const ExperimentOptions& options) {
  ExperimentReport report = NewReport("hiding", options, corpus);
  const std::vector<PerturbedDoc> mirror = BuildBadCorpus(
      corpus, techniques, options.seed, options.base_url, *options.table);
  for (std::size_t ti = 0; ti < techniques.size(); ++ti) {
    std::vector<PerturbedDoc> subset;
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      subset.push_back(mirror[d * techniques.size() + ti]);
    }
    const auto engine = MakeEngine(options.engine, subset, *options.table);
    RowBuilder row(report, std::string(TechniqueName(techniques[ti])),
                   std::nullopt);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      Measure(row, corpus[d].id, [&] {
        const Serp serp = engine->Search(corpus[d].title, options.serp_size);
        return static_cast<double>(Hiding(serp, subset[d].url));
      });
    }
    row.Finish();
  }
  return report;
}

ExperimentReport RunSurfacing(std::span<const SourceDoc> corpus,
                              std::span<const Technique> techniques,
                              const ExperimentOptions& options) {
  ExperimentReport report = NewReport("surfacing", options, corpus);
  const std::vector<PerturbedDoc> mirror = BuildBadCorpus(
      corpus, techniques, options.seed, options.base_url, *options.table);
  const auto engine = MakeEngine(options.engine, mirror, *options.table);
  for (std::size_t ti = 0; ti < techniques.size(); ++ti) {
    RowBuilder row(report, std::string(TechniqueName(techniques[ti])),
                   std::nullopt);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      const PerturbedDoc& copy = mirror[d * techniques.size() + ti];
      Measure(row, corpus[d].id, [&] {
        const Serp serp = engine->Search(copy.title, options.serp_size);
        return static_cast<double>(Surfacing(serp, copy.url));
      });
    }
    row.Finish();
  }
  return report;
}

ExperimentReport RunDisruptionSweep(std::span<const SourceDoc> corpus,
                                    std::span<const std::string> queries,
                                    std::span<const Technique> techniques,
                                    std::span<const std::size_t> ks,
                                    const ExperimentOptions& options) {
  ExperimentReport report = NewReport("disruption", options, corpus);
  std::vector<PerturbedDoc> clean;
  for (const SourceDoc& doc : corpus) {
    clean.push_back({doc.id, doc.url, doc.title, doc.body,
                     {Technique::kBase, 0}, doc.id});
  }
  const auto engine = MakeEngine(options.engine, clean, *options.table);

  std::vector<std::optional<Serp>> benign(queries.size());
  std::vector<std::string> benign_error(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q) {
    try {
      benign[q] = engine->Search(queries[q], options.serp_size);
    } catch (const RemoteError& e) {
      benign_error[q] = e.what();
    }
  }

  for (Technique t : techniques) {
    for (std::size_t k : ks) {
      RowBuilder row(report, std::string(TechniqueName(t)), k);
      for (std::size_t q = 0; q < queries.size(); ++q) {
        const std::string id = "q" + std::to_string(q);
        if (!benign[q]) {
          row.Add(id, std::nullopt, benign_error[q]);
          continue;
        }
        std::string adversarial = queries[q];
        if (k > 0) {
          const std::uint64_t seed = DeriveSeed(
              options.seed, "disruption", {q, static_cast<std::uint64_t>(t)});
          try {
            adversarial = t == Technique::kRlo
                              ? RloWordPerturb(queries[q], seed, *options.table)
                              : InjectK(queries[q], t, k, seed, *options.table);
          } catch (const std::out_of_range& e) {
            row.Add(id, std::nullopt, e.what());
            continue;
          }
        }
        Measure(row, id, [&]() -> std::optional<double> {
          const Serp serp = engine->Search(adversarial, options.serp_size);
          return Disruption(*benign[q], serp);
        });
      }
      row.Finish();
    }
  }
  // Empty benign Serps leave null samples with no error text.
  for (ReportSample& s : report.samples) {
    if (!s.value && s.error.empty()) s.error = "empty benign serp";
  }
  return report;
}

ExperimentReport RunEvasion(std::span<const std::string> texts,
                            std::span<const Technique> techniques,
                            std::uint64_t seed,
                            const PlagiarismOptions& options) {
  ExperimentReport report;
  report.experiment = "evasion";
  report.engine = options.sanitize_first ? "checker-sanitized" : "checker-raw";
  report.seed = seed;
  report.corpus_fingerprint = TextsFingerprint(texts);
  const PlagiarismChecker checker(
      std::vector<std::string>(texts.begin(), texts.end()), options);
  for (Technique t : techniques) {
    RowBuilder row(report, std::string(TechniqueName(t)), std::nullopt);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      const PerturbationTechnique technique{
          t, DeriveSeed(seed, "evasion", {i, static_cast<std::uint64_t>(t)})};
      const bool flagged = checker.Check(Obfuscate(texts[i], technique)).flagged;
      row.Add(std::to_string(i), flagged ? 0.0 : 1.0);
    }
    row.Finish();
  }
  return report;
}

ExperimentReport RunMikadoCampaign(std::span<const std::string> texts,
                                   std::span<const Technique> techniques,
                                   const MikadoConfig& config,
                                   const Summarizer& summarizer) {
  ExperimentReport report;
  report.experiment = "mikado";
  report.engine = "summarizer";
  report.seed = config.seed;
  report.corpus_fingerprint = TextsFingerprint(texts);
  for (Technique t : techniques) {
    RowBuilder row(report, std::string(TechniqueName(t)), std::nullopt);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      MikadoConfig run = config;
      run.technique = {t, DeriveSeed(config.seed, "mikado.technique",
                                     {i, static_cast<std::uint64_t>(t)})};
      run.seed = DeriveSeed(config.seed, "mikado.run", {i});
      const MikadoState state = Mikado(texts[i], run, summarizer);
      row.Add(std::to_string(i), state.similarity);
    }
    row.Finish();
  }
  return report;
}

}  // namespace badenc
