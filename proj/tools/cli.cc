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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "badenc/config.h"
#include "badenc/corpus.h"
#include "badenc/experiments.h"
#include "badenc/metrics.h"
#include "badenc/mikado.h"
#include "badenc/minisearch.h"
#include "badenc/perturb.h"
#include "badenc/plagiarism.h"
#include "badenc/remote.h"
#include "badenc/rng.h"
#include "badenc/sanitize.h"
#include "badenc/summarizer.h"
#include "badenc/unicode_core.h"
#include "badenc/utf8.h"
#include "json.hpp"

namespace badenc::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadAll(in);
}

// All text input is strict UTF-8.
std::string ReadText(const std::string& path, std::istream& fallback) {
  std::string text = path.empty() || path == "-" ? ReadAll(fallback)
                                                 : ReadFile(path);
  DecodeUtf8(text);
  return text;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<Technique> ParseTechniqueList(const std::vector<std::string>& names,
                                          std::span<const Technique> fallback) {
  if (names.empty()) return {fallback.begin(), fallback.end()};
  std::vector<Technique> out;
  for (const std::string& name : names) {
    auto t = TryParseTechnique(name);
    if (!t) throw UsageError("unknown technique: " + name);
    out.push_back(*t);
  }
  return out;
}

const std::vector<std::string> kTechniqueNames = {
    "base", "zwsp", "zwnj", "zwj", "homo", "homo2", "rlo", "bksp", "del", "zwsp2"};

// The first positional argument, skipping global options and their values,
// when it does not name a subcommand.
std::optional<std::string> UnknownSubcommand(const std::vector<std::string>& args,
                                             const CLI::App& app) {
  static const std::vector<std::string> kValued = {"--seed", "--config",
                                                   "--format", "--homoglyphs"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (std::find(kValued.begin(), kValued.end(), a) != kValued.end()) {
      ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    for (const CLI::App* sub : app.get_subcommands({})) {
      if (sub->get_name() == a) return std::nullopt;
    }
    return a;
  }
  return std::nullopt;
}

struct Globals {
  std::uint64_t seed = 0;
  std::string config_path;
  // Empty means the subcommand's own default.
  std::string format;
  std::string homoglyphs;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  void LoadSettings();
  const HomoglyphTable& table() const { return *table_; }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Globals globals_;
  Config config_;
  std::optional<HomoglyphTable> custom_table_;
  const HomoglyphTable* table_ = &HomoglyphTable::Default();
};

void Runner::LoadSettings() {
  if (!globals_.config_path.empty()) config_.MergeFile(globals_.config_path);
  std::string table_path = globals_.homoglyphs.empty() ? config_.homoglyph_table
                                                       : globals_.homoglyphs;
  if (!table_path.empty()) {
    custom_table_ = HomoglyphTable::FromFile(table_path);
    table_ = &*custom_table_;
  }
}

int Runner::Run(const std::vector<std::string>& args) {
  CLI::App app{"Imperceptible Unicode perturbation toolkit", "badenc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", globals_.seed, "Root RNG seed")->capture_default_str();
  app.add_option("--config", globals_.config_path,
                 "key = value file overriding defaults")
      ->check(CLI::ExistingFile);
  app.add_option("--format", globals_.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--homoglyphs", globals_.homoglyphs,
                 "Homoglyph table JSON replacing the built-in one")
      ->check(CLI::ExistingFile);

  // perturb
  auto* perturb = app.add_subcommand("perturb", "Perturb text from stdin or a file");
  std::string technique_name;
  std::optional<std::size_t> k;
  std::size_t cmax = kDefaultZwsp2MaxCount;
  std::string input;
  perturb->add_option("--technique,-t", technique_name)
      ->required()
      ->check(CLI::IsMember(kTechniqueNames));
  perturb->add_option("--k", k, "Inject exactly k sites instead of all");
  perturb->add_option("--cmax", cmax, "zwsp2: most ZWSPs per word")
      ->check(CLI::PositiveNumber);
  perturb->add_option("--input,-i", input, "Input file (default stdin)");

  // detect
  auto* detect = app.add_subcommand("detect", "Report suspicious characters");
  detect->add_option("--input,-i", input, "Input file (default stdin)");

  // sanitize
  auto* sanitize = app.add_subcommand("sanitize", "Remove perturbations");
  bool strip_only = false;
  sanitize->add_option("--input,-i", input, "Input file (default stdin)");
  sanitize->add_flag("--strip", strip_only,
                     "Scoring variant: drop bidi controls without reordering");

  // score
  auto* score = app.add_subcommand("score", "Similarity of two texts");
  std::string metric;
  std::string ref_path;
  std::string cand_path;
  bool raw = false;
  score->add_option("--metric", metric)
      ->required()
      ->check(CLI::IsMember({"bleu", "chrf"}));
  score->add_option("--ref", ref_path)->required()->check(CLI::ExistingFile);
  score->add_option("--cand", cand_path)->required()->check(CLI::ExistingFile);
  score->add_flag("--raw", raw, "Skip stripping perturbations before scoring");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Build the perturbed mirror corpus");
  std::string corpus_path;
  std::string out_path;
  std::vector<std::string> technique_names;
  std::string base_url = kDefaultMirrorBaseUrl;
  corpus->add_option("--corpus", corpus_path, "Source JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  corpus->add_option("--out", out_path, "Perturbed JSONL")->required();
  corpus->add_option("--techniques", technique_names)
      ->delimiter(',')
      ->check(CLI::IsMember(kTechniqueNames));
  corpus->add_option("--base-url", base_url)->capture_default_str();

  // index
  auto* index = app.add_subcommand("index", "Build a local search index");
  std::string mode_name = "vulnerable";
  index->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"vulnerable", "defended"}))
      ->capture_default_str();
  index->add_option("--corpus", corpus_path, "Source or perturbed JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  index->add_option("--out", out_path)->required();

  // search
  auto* search = app.add_subcommand("search", "Query a local index");
  std::string index_path;
  std::string query_file;
  std::string query;
  std::optional<std::size_t> size;
  search->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
  auto* query_file_opt =
      search->add_option("--query-file", query_file)->check(CLI::ExistingFile);
  search->add_option("--query", query)->excludes(query_file_opt);
  search->add_option("--size", size)->check(CLI::PositiveNumber);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run an experiment");
  std::string kind;
  std::string remote;
  std::string queries_path;
  std::vector<std::size_t> ks;
  bool sanitize_first = false;
  std::string summarizer_cmd;
  experiment->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"hiding", "surfacing", "disruption", "evasion", "mikado"}));
  experiment->add_option("--corpus", corpus_path)->required()->check(CLI::ExistingFile);
  experiment->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"vulnerable", "defended"}))
      ->capture_default_str();
  experiment->add_option("--remote", remote, "http:// endpoint of an external engine");
  experiment->add_option("--out", out_path, "Report path (default stdout)");
  experiment->add_option("--techniques", technique_names)
      ->delimiter(',')
      ->check(CLI::IsMember(kTechniqueNames));
  experiment->add_option("--queries", queries_path,
                         "disruption: one query per line (default: titles)")
      ->check(CLI::ExistingFile);
  experiment->add_option("--ks", ks, "disruption: injection counts")->delimiter(',');
  experiment->add_flag("--sanitize-first", sanitize_first,
                       "evasion: sanitize candidates before checking");
  experiment->add_option("--summarizer-cmd", summarizer_cmd,
                         "mikado: external summarizer command");

  // mikado
  auto* mikado = app.add_subcommand("mikado", "Minimize perturbation under a summary budget");
  std::optional<std::size_t> population;
  std::optional<std::size_t> step;
  std::optional<double> budget;
  std::size_t max_iterations = 1000;
  std::optional<std::size_t> sentences;
  bool allow_bidi = false;
  mikado->add_option("--technique,-t", technique_name)
      ->required()
      ->check(CLI::IsMember(kTechniqueNames));
  mikado->add_option("-p,--population", population)->check(CLI::PositiveNumber);
  mikado->add_option("-n,--step", step)->check(CLI::PositiveNumber);
  mikado->add_option("-b,--budget", budget)->check(CLI::Range(0.0, 1.0));
  mikado->add_option("--input,-i", input)->required()->check(CLI::ExistingFile);
  mikado->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  mikado->add_option("--summarizer-cmd", summarizer_cmd);
  mikado->add_option("--sentences", sentences)->check(CLI::PositiveNumber);
  mikado->add_flag("--allow-bidi", allow_bidi);

  // plagiarism
  auto* plagiarism = app.add_subcommand("plagiarism", "Check a candidate against a corpus");
  std::string candidate_path;
  std::size_t ngram = 3;
  double threshold = 0.5;
  plagiarism->add_option("--corpus", corpus_path, "JSONL; bodies are the reference texts")
      ->required()
      ->check(CLI::ExistingFile);
  plagiarism->add_option("--candidate", candidate_path)->required()->check(CLI::ExistingFile);
  plagiarism->add_option("--ngram", ngram)->check(CLI::PositiveNumber)->capture_default_str();
  plagiarism->add_option("--threshold", threshold)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  plagiarism->add_flag("--sanitize-first", sanitize_first);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (auto unknown = UnknownSubcommand(args, app)) {
      err_ << "badenc: unknown subcommand: " << *unknown << "\n" << app.help();
      return kExitUsage;
    }
    err_ << "badenc: " << e.what() << "\n";
    if (auto subs = app.get_subcommands(); !subs.empty()) {
      err_ << subs.front()->help();
    } else {
      err_ << app.help();
    }
    return kExitUsage;
  }

  try {
    LoadSettings();
    const std::string& format = globals_.format;

    if (*perturb) {
      const std::string text = ReadText(input, in_);
      const Technique t = ParseTechnique(technique_name);
      const std::uint64_t seed = DeriveSeed(globals_.seed, "perturb");
      if (k) {
        if (std::find(std::begin(kInjectableTechniques),
                      std::end(kInjectableTechniques),
                      t) == std::end(kInjectableTechniques)) {
          throw UsageError("--k is not supported for " + technique_name);
        }
        if (*k == 0) throw UsageError("--k must be positive");
        out_ << InjectK(text, t, *k, seed, table());
      } else if (t == Technique::kZwsp2) {
        out_ << Zwsp2Title(text, seed, cmax);
      } else {
        out_ << Obfuscate(text, {t, seed}, table());
      }
      return kExitOk;
    }

    if (*detect) {
      const ScanReport report = Scan(ReadText(input, in_), table());
      if (format == "text" || format == "csv") {
        for (const ScanHit& hit : report.hits) {
          out_ << hit.byte_offset << '\t' << CodePointLabel(hit.scalar) << '\t'
               << CharClassName(hit.kind) << '\n';
        }
        out_ << (report.clean() ? "clean" : "perturbed") << '\n';
      } else {
        out_ << report.ToJson() << '\n';
      }
      return kExitOk;
    }

    if (*sanitize) {
      const std::string text = ReadText(input, in_);
      out_ << (strip_only ? StripForScoring(text, table()) : Sanitize(text, table()));
      return kExitOk;
    }

    if (*score) {
      std::string ref = ReadText(ref_path, in_);
      std::string cand = ReadText(cand_path, in_);
      if (!raw) {
        ref = StripForScoring(ref, table());
        cand = StripForScoring(cand, table());
      }
      const double value = metric == "bleu" ? Bleu(ref, cand) : Chrf(ref, cand);
      if (format == "json") {
        out_ << nlohmann::json{{"metric", metric}, {"score", value}}.dump() << '\n';
      } else {
        std::ostringstream s;
        s.precision(17);
        s << value;
        out_ << s.str() << '\n';
      }
      return kExitOk;
    }

    if (*corpus) {
      const auto docs = ReadSourceCorpusFile(corpus_path);
      const auto techniques = ParseTechniqueList(technique_names, kWikiTechniques);
      const auto mirror = BuildBadCorpus(docs, techniques,
                                         DeriveSeed(globals_.seed, "corpus"),
                                         base_url, table());
      std::ostringstream buf;
      WritePerturbedCorpus(buf, mirror);
      WriteFile(out_path, buf.str());
      return kExitOk;
    }

    if (*index) {
      Index idx(ParseAnalyzerMode(mode_name), config_.bm25, table());
      for (const SourceDoc& doc : ReadSourceCorpusFile(corpus_path)) idx.Add(doc);
      idx.SaveFile(out_path);
      return kExitOk;
    }

    if (*search) {
      if (query_file.empty() && query.empty()) {
        throw UsageError("search needs --query or --query-file");
      }
      Index idx = Index::LoadFile(index_path, table());
      std::string q = query_file.empty() ? query : ReadText(query_file, in_);
      while (!q.empty() && (q.back() == '\n' || q.back() == '\r')) q.pop_back();
      const Serp serp = idx.Search(q, size.value_or(config_.serp_size));
      if (format == "json") {
        out_ << serp.ToJson() << '\n';
      } else {
        for (std::size_t i = 0; i < serp.results.size(); ++i) {
          out_ << i + 1 << '\t' << serp.results[i].score << '\t'
               << serp.results[i].url << '\n';
        }
      }
      return kExitOk;
    }

    if (*experiment) {
      const auto docs = ReadSourceCorpusFile(corpus_path);
      ExperimentReport report;
      if (kind == "evasion" || kind == "mikado") {
        std::vector<std::string> texts;
        for (const SourceDoc& d : docs) texts.push_back(d.body);
        if (kind == "evasion") {
          const auto techniques = ParseTechniqueList(technique_names, kWikiTechniques);
          PlagiarismOptions options;
          options.sanitize_first = sanitize_first;
          report = RunEvasion(texts, techniques, globals_.seed, options);
        } else {
          static constexpr Technique kMikadoDefault[] = {
              Technique::kZwsp, Technique::kZwnj, Technique::kZwj,
              Technique::kHomo, Technique::kBksp, Technique::kDel};
          const auto techniques = ParseTechniqueList(technique_names, kMikadoDefault);
          MikadoConfig cfg;
          cfg.population = config_.mikado_p;
          cfg.step = config_.mikado_n;
          cfg.budget = config_.mikado_b;
          cfg.seed = globals_.seed;
          SummarizerRef ref;
          ref.sentences = config_.summary_sentences;
          if (!summarizer_cmd.empty()) {
            ref.kind = SummarizerRef::Kind::kExternalCommand;
            ref.command = summarizer_cmd;
          }
          report = RunMikadoCampaign(texts, techniques, cfg, *ref.Make());
        }
      } else {
        ExperimentOptions options;
        options.seed = globals_.seed;
        options.serp_size = config_.serp_size;
        options.table = &table();
        options.engine.mode = ParseAnalyzerMode(mode_name);
        options.engine.bm25 = config_.bm25;
        if (!remote.empty()) {
          options.engine.kind = EngineSpec::Kind::kRemote;
          options.engine.endpoint = remote;
        }
        if (kind == "hiding") {
          report = RunHiding(docs, ParseTechniqueList(technique_names, kWikiTechniques),
                             options);
        } else if (kind == "surfacing") {
          report = RunSurfacing(
              docs, ParseTechniqueList(technique_names, kWikiTechniques), options);
        } else {
          std::vector<std::string> queries;
          if (queries_path.empty()) {
            for (const SourceDoc& d : docs) queries.push_back(d.title);
          } else {
            std::istringstream lines(ReadText(queries_path, in_));
            for (std::string line; std::getline(lines, line);) {
              if (!line.empty()) queries.push_back(line);
            }
          }
          std::vector<std::size_t> sweep = ks;
          if (sweep.empty()) {
            sweep.push_back(0);
            sweep.insert(sweep.end(), std::begin(kDefaultSweepKs),
                         std::end(kDefaultSweepKs));
          }
          report = RunDisruptionSweep(
              docs, queries,
              ParseTechniqueList(technique_names, kInjectableTechniques), sweep,
              options);
        }
      }
      for (const ReportSample& s : report.samples) {
        if (!s.value && !s.error.empty()) {
          err_ << "badenc: " << s.technique << ' ' << s.query_id << ": "
               << s.error << '\n';
        }
      }
      const std::string rendered = format == "csv" ? report.ToCsv() : report.ToJson();
      if (out_path.empty()) {
        out_ << rendered;
      } else {
        WriteFile(out_path, rendered);
      }
      return kExitOk;
    }

    if (*mikado) {
      MikadoConfig cfg;
      cfg.technique = {ParseTechnique(technique_name),
                       DeriveSeed(globals_.seed, "mikado.technique")};
      cfg.population = population.value_or(config_.mikado_p);
      cfg.step = step.value_or(config_.mikado_n);
      cfg.budget = budget.value_or(config_.mikado_b);
      cfg.seed = DeriveSeed(globals_.seed, "mikado");
      cfg.max_iterations = max_iterations;
      cfg.allow_bidi = allow_bidi;
      try {
        cfg.Validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      SummarizerRef ref;
      ref.sentences = sentences.value_or(config_.summary_sentences);
      if (!summarizer_cmd.empty()) {
        ref.kind = SummarizerRef::Kind::kExternalCommand;
        ref.command = summarizer_cmd;
      }
      const MikadoState state =
          Mikado(ReadText(input, in_), cfg, *ref.Make(), {}, table());
      if (format == "json") {
        nlohmann::json doc;
        doc["technique"] = technique_name;
        doc["adversarial"] = state.adversarial;
        doc["similarity"] = state.similarity;
        doc["budget_met"] = state.budget_met;
        doc["iterations"] = state.iterations;
        doc["full_site_count"] = state.full_site_count;
        doc["site_count"] = state.sites.size();
        doc["site_history"] = state.site_history;
        out_ << doc.dump(2) << '\n';
      } else {
        out_ << state.adversarial;
      }
      return kExitOk;
    }

    if (*plagiarism) {
      std::vector<std::string> texts;
      for (const SourceDoc& d : ReadSourceCorpusFile(corpus_path)) {
        texts.push_back(d.body);
      }
      PlagiarismOptions options{ngram, threshold, sanitize_first};
      const PlagiarismVerdict verdict =
          PlagiarismCheck(ReadText(candidate_path, in_), texts, options);
      out_ << nlohmann::json{{"score", verdict.score},
                             {"flagged", verdict.flagged},
                             {"threshold", verdict.threshold},
                             {"order", verdict.order}}
                  .dump()
           << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err_ << "badenc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err_ << "badenc: " << e.what() << "\n";
    return kExitOperational;
  }
  return kExitUsage;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  return Runner(in, out, err).Run(args);
}

}  // namespace badenc::cli
