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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "badenc/corpus.h"
#include "badenc/experiments.h"
#include "badenc/sanitize.h"
#include "badenc/utf8.h"
#include "json.hpp"
#include "support/fixtures.h"

namespace badenc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = Dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("badenc_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    std::ofstream corpus(Path("corpus.jsonl"));
    WriteSourceCorpus(corpus, testing::SyntheticCorpus(12, 5, 4));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& contents) const {
    std::ofstream(Path(name)) << contents;
    return Path(name);
  }
  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, PerturbAndSanitizeRoundTrip) {
  for (const char* t : {"zwsp", "zwnj", "zwj", "homo", "homo2", "rlo", "bksp", "del",
                        "zwsp2", "base"}) {
    const Result p = Cli({"perturb", "-t", t, "--seed", "9"}, "Hello world");
    ASSERT_EQ(p.code, kExitOk) << t << p.err;
    const Result s = Cli({"sanitize"}, p.out);
    EXPECT_EQ(s.out, "Hello world") << t;
  }
  EXPECT_EQ(Cli({"perturb", "-t", "zwsp"}, "dog").out, "d\xE2\x80\x8Bo\xE2\x80\x8Bg");
}

TEST_F(CliTest, PerturbIsSeedReproducible) {
  const auto a = Cli({"--seed", "4", "perturb", "-t", "homo"}, "reproducible");
  const auto b = Cli({"perturb", "-t", "homo", "--seed", "4"}, "reproducible");
  const auto c = Cli({"perturb", "-t", "homo", "--seed", "5"}, "reproducible");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, PerturbInjectK) {
  const Result r = Cli({"perturb", "-t", "zwj", "--k", "2"}, "abcdef");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(DecodeUtf8(r.out).size(), 8u);
  EXPECT_EQ(Cli({"perturb", "-t", "zwj", "--k", "99"}, "abc").code, kExitOperational);
  EXPECT_EQ(Cli({"perturb", "-t", "rlo", "--k", "1"}, "abc").code, kExitUsage);
}

TEST_F(CliTest, PerturbErrors) {
  EXPECT_EQ(Cli({"perturb", "-t", "zwsp"}, "a\xE2\x80\x8B" "b").code, kExitOperational);
  EXPECT_EQ(Cli({"perturb", "-t", "zwsp"}, "\xFF").code, kExitOperational);
  EXPECT_EQ(Cli({"perturb", "-t", "nope"}, "abc").code, kExitUsage);
  EXPECT_EQ(Cli({"perturb"}, "abc").code, kExitUsage);
}

TEST_F(CliTest, DetectReportsHomoglyphs) {
  const Result r = Cli({"detect"}, "\xD4\x81\xCE\xBFg");
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["hits"].size(), 2u);
  EXPECT_FALSE(doc["clean"].get<bool>());
  const Result text = Cli({"detect", "--format", "text"}, "plain");
  EXPECT_EQ(text.out, "clean\n");
}

TEST_F(CliTest, SanitizeCleanInputUnchanged) {
  const std::string text = "Nothing to see here.\n";
  EXPECT_EQ(Cli({"sanitize"}, text).out, text);
  EXPECT_EQ(Cli({"sanitize", "--strip"}, "\xE2\x80\xAEgod\xE2\x80\xAC").out, "god");
}

TEST_F(CliTest, Score) {
  const std::string ref = Write("ref.txt", "the cat sat on the mat");
  const std::string cand = Write("cand.txt", "the cat on the mat");
  const Result bleu = Cli({"score", "--metric", "bleu", "--ref", ref, "--cand", cand});
  ASSERT_EQ(bleu.code, kExitOk);
  EXPECT_NEAR(std::stod(bleu.out), 0.40936537653899097, 1e-12);
  const Result chrf = Cli({"score", "--metric", "chrf", "--ref", ref, "--cand", ref,
                           "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(chrf.out)["score"].get<double>(), 1.0);
  EXPECT_EQ(Cli({"score", "--ref", ref}).code, kExitUsage);
}

TEST_F(CliTest, CorpusIndexSearch) {
  ASSERT_EQ(Cli({"corpus", "--corpus", Path("corpus.jsonl"), "--out", Path("bad.jsonl"),
                 "--techniques", "zwsp,homo"})
                .code,
            kExitOk);
  std::ifstream bad(Path("bad.jsonl"));
  EXPECT_EQ(ReadPerturbedCorpus(bad).size(), 24u);

  ASSERT_EQ(Cli({"index", "--corpus", Path("corpus.jsonl"), "--out", Path("idx")}).code,
            kExitOk);
  const auto docs = testing::SyntheticCorpus(12, 5, 4);
  const Result hit = Cli({"search", "--index", Path("idx"), "--query", docs[3].title,
                          "--format", "json"});
  ASSERT_EQ(hit.code, kExitOk) << hit.err;
  const auto serp = nlohmann::json::parse(hit.out);
  EXPECT_EQ(serp["results"][0]["url"], docs[3].url);
  const Result text = Cli({"search", "--index", Path("idx"), "--query", docs[3].title,
                           "--size", "2"});
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 2);
  EXPECT_EQ(Cli({"search", "--index", Path("idx")}).code, kExitUsage);
  EXPECT_EQ(Cli({"index", "--corpus", Path("corpus.jsonl"), "--out", Path("i2"),
                 "--mode", "robust"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, ExperimentReportsAreDeterministic) {
  for (const char* kind : {"hiding", "surfacing", "disruption", "evasion"}) {
    const Result a = Cli({"experiment", kind, "--corpus", Path("corpus.jsonl"), "--seed", "3"});
    const Result b = Cli({"experiment", kind, "--corpus", Path("corpus.jsonl"), "--seed", "3"});
    ASSERT_EQ(a.code, kExitOk) << kind << a.err;
    EXPECT_EQ(a.out, b.out) << kind;
    EXPECT_EQ(ExperimentReport::FromJson(a.out).experiment, kind);
  }
  const Result csv = Cli({"experiment", "hiding", "--corpus", Path("corpus.jsonl"),
                          "--format", "csv", "--out", Path("hiding.csv")});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(Read("hiding.csv").rfind("experiment,engine,technique,k,mean,count,nulls\n", 0),
            0u);
  EXPECT_EQ(Cli({"experiment", "bogus", "--corpus", Path("corpus.jsonl")}).code, kExitUsage);
}

TEST_F(CliTest, ExperimentDisruptionOptions) {
  Write("queries.txt", "river market\ncastle bridge\n");
  const Result r = Cli({"experiment", "disruption", "--corpus", Path("corpus.jsonl"),
                        "--queries", Path("queries.txt"), "--ks", "0,2",
                        "--techniques", "zwsp", "--mode", "defended"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = ExperimentReport::FromJson(r.out);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.engine, "local-defended");
  for (const auto& row : report.rows) EXPECT_EQ(*row.mean, 0.0);
}

TEST_F(CliTest, MikadoSubcommand) {
  const std::string doc = Write("doc.txt", testing::SyntheticCorpus(1, 3, 20)[0].body);
  const Result r = Cli({"mikado", "--technique", "zwnj", "-p", "20", "-n", "250", "-b",
                        "0.1", "--seed", "1", "--input", doc, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto state = nlohmann::json::parse(r.out);
  EXPECT_TRUE(state["budget_met"].get<bool>());
  EXPECT_LE(state["similarity"].get<double>(), 0.1);
  EXPECT_LT(state["site_count"].get<std::size_t>(),
            state["full_site_count"].get<std::size_t>());
  EXPECT_EQ(Sanitize(state["adversarial"].get<std::string>()), Read("doc.txt"));
  EXPECT_EQ(Cli({"mikado", "--technique", "zwnj"}).code, kExitUsage);
  EXPECT_EQ(Cli({"mikado", "-t", "rlo", "--input", doc}).code, kExitUsage);
  EXPECT_EQ(Cli({"mikado", "-t", "zwsp", "--input", doc, "--summarizer-cmd", "exit 4"}).code,
            kExitOperational);
}

TEST_F(CliTest, Plagiarism) {
  const std::string copy = Write("copy.txt", testing::SyntheticCorpus(12, 5, 4)[2].body);
  const Result raw = Cli({"plagiarism", "--corpus", Path("corpus.jsonl"), "--candidate", copy});
  ASSERT_EQ(raw.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(raw.out)["flagged"].get<bool>());
  const Result p = Cli({"perturb", "-t", "zwsp", "--input", copy});
  const std::string perturbed = Write("perturbed.txt", p.out);
  EXPECT_FALSE(nlohmann::json::parse(
                   Cli({"plagiarism", "--corpus", Path("corpus.jsonl"), "--candidate",
                        perturbed})
                       .out)["flagged"]
                   .get<bool>());
  EXPECT_TRUE(nlohmann::json::parse(
                  Cli({"plagiarism", "--corpus", Path("corpus.jsonl"), "--candidate",
                       perturbed, "--sanitize-first"})
                      .out)["flagged"]
                  .get<bool>());
}

TEST_F(CliTest, ConfigAndHomoglyphOverrides) {
  const std::string table = Write("table.json", R"({"a": ["@"]})");
  EXPECT_EQ(Cli({"--homoglyphs", table, "perturb", "-t", "homo2"}, "cat").out, "c@t");
  const std::string config = Write("badenc.conf", "homoglyph_table = " + table + "\n");
  EXPECT_EQ(Cli({"--config", config, "sanitize"}, "c@t").out, "cat");
  const std::string bad = Write("bad.conf", "colour = blue\n");
  EXPECT_EQ(Cli({"--config", bad, "sanitize"}, "x").code, kExitOperational);
}

TEST_F(CliTest, UsageAndHelp) {
  const Result unknown = Cli({"frob"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown subcommand: frob"), std::string::npos);
  EXPECT_NE(unknown.err.find("Subcommands:"), std::string::npos);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  for (const char* sub : {"perturb", "detect", "sanitize", "score", "corpus", "index",
                          "search", "experiment", "mikado", "plagiarism"}) {
    const Result help = Cli({sub, "--help"});
    EXPECT_EQ(help.code, kExitOk) << sub;
    EXPECT_NE(help.out.find("Usage"), std::string::npos) << sub;
  }
  EXPECT_EQ(Cli({"--format", "xml", "detect"}, "x").code, kExitUsage);
}

}  // namespace
}  // namespace badenc::cli
