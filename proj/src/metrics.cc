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

#include "badenc/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "badenc/utf8.h"

namespace badenc {
namespace {

std::vector<std::string> WhitespaceTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

template <typename Seq>
std::map<Seq, int> NGramCounts(const Seq& seq, std::size_t n) {
  std::map<Seq, int> counts;
  if (seq.size() < n) return counts;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    ++counts[Seq(seq.begin() + static_cast<std::ptrdiff_t>(i),
                 seq.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

template <typename Seq>
int ClippedMatches(const std::map<Seq, int>& candidate,
                   const std::map<Seq, int>& reference) {
  int matches = 0;
  for (const auto& [gram, count] : candidate) {
    auto it = reference.find(gram);
    if (it != reference.end()) matches += std::min(count, it->second);
  }
  return matches;
}

bool IsScoringWhitespace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f' || c == 0x00A0 || c == 0x3000 || (c >= 0x2000 && c <= 0x200A);
}

}  // namespace

std::string_view MetricKindName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kDisruption:
      return "disruption";
    case MetricKind::kHiding:
      return "hiding";
    case MetricKind::kSurfacing:
      return "surfacing";
  }
  return "disruption";
}

std::optional<double> Disruption(const Serp& benign, const Serp& adversarial) {
  const auto benign_urls = benign.Urls();
  const std::set<std::string> benign_set(benign_urls.begin(), benign_urls.end());
  if (benign_set.empty()) return std::nullopt;
  const auto adv_urls = adversarial.Urls();
  const std::set<std::string> adv_set(adv_urls.begin(), adv_urls.end());
  std::size_t shared = 0;
  for (const std::string& url : benign_set) shared += adv_set.count(url);
  return 1.0 - static_cast<double>(shared) / static_cast<double>(benign_set.size());
}

int Hiding(const Serp& serp, std::string_view adversarial_url) {
  return serp.Contains(adversarial_url) ? 0 : 1;
}

int Surfacing(const Serp& adversarial_serp, std::string_view adversarial_url) {
  return adversarial_serp.Contains(adversarial_url) ? 1 : 0;
}

double Bleu(std::string_view reference, std::string_view candidate) {
  const auto ref = WhitespaceTokens(reference);
  const auto cand = WhitespaceTokens(candidate);
  if (cand.empty() || ref.empty()) return 0.0;

  const std::size_t max_order =
      std::min<std::size_t>(kBleuMaxOrder, cand.size());
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto cand_counts = NGramCounts(cand, n);
    const auto ref_counts = NGramCounts(ref, n);
    const double total = static_cast<double>(cand.size() - n + 1);
    const int matches = ClippedMatches(cand_counts, ref_counts);
    const double precision =
        matches > 0 ? matches / total : 1.0 / (2.0 * total);
    log_sum += std::log(precision);
  }
  const double c = static_cast<double>(cand.size());
  const double r = static_cast<double>(ref.size());
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return brevity * std::exp(log_sum / static_cast<double>(max_order));
}

double Chrf(std::string_view reference, std::string_view candidate) {
  auto squeeze = [](std::string_view text) {
    std::u32string out;
    for (char32_t c : DecodeUtf8(text)) {
      if (!IsScoringWhitespace(c)) out.push_back(c);
    }
    return out;
  };
  const std::u32string ref = squeeze(reference);
  const std::u32string hyp = squeeze(candidate);
  if (hyp.empty() || ref.empty()) return 0.0;

  double precision_sum = 0.0;
  double recall_sum = 0.0;
  int orders = 0;
  for (std::size_t n = 1; n <= kChrfMaxOrder; ++n) {
    if (hyp.size() < n || ref.size() < n) break;
    const auto hyp_counts = NGramCounts(hyp, n);
    const auto ref_counts = NGramCounts(ref, n);
    const double matches = ClippedMatches(hyp_counts, ref_counts);
    precision_sum += matches / static_cast<double>(hyp.size() - n + 1);
    recall_sum += matches / static_cast<double>(ref.size() - n + 1);
    ++orders;
  }
  const double p = precision_sum / orders;
  const double r = recall_sum / orders;
  const double beta2 = kChrfBeta * kChrfBeta;
  const double denom = beta2 * p + r;
  if (denom == 0.0) return 0.0;
  return (1.0 + beta2) * p * r / denom;
}

double AttackSuccessRate(const std::vector<bool>& fooled) {
  if (fooled.empty()) {
    throw std::invalid_argument("attack success rate of an empty outcome list");
  }
  const auto hits = std::count(fooled.begin(), fooled.end(), true);
  return static_cast<double>(hits) / static_cast<double>(fooled.size());
}

}  // namespace badenc
