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

#ifndef BADENC_METRICS_H_
#define BADENC_METRICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "badenc/minisearch.h"
#include "badenc/perturb.h"

namespace badenc {

enum class MetricKind { kDisruption, kHiding, kSurfacing };

std::string_view MetricKindName(MetricKind kind);

struct MetricSample {
  PerturbationTechnique technique;
  std::string query;
  // Absent when the metric is undefined for this query.
  std::optional<double> value;
  MetricKind kind = MetricKind::kDisruption;
};

// 1 - |benign ∩ adversarial| / |benign| over URL sets. Absent when the benign
// Serp is empty.
std::optional<double> Disruption(const Serp& benign, const Serp& adversarial);

// 0 when the perturbed page appears for the unperturbed query, else 1.
int Hiding(const Serp& serp, std::string_view adversarial_url);

// 1 when the perturbed page appears for the perturbed query, else 0.
int Surfacing(const Serp& adversarial_serp, std::string_view adversarial_url);

// Sentence BLEU over whitespace tokens: clipped n-gram precisions for
// n = 1..min(4, |candidate|), uniform weights, brevity penalty. An order with
// no matches contributes 1 / (2 * candidate n-gram count). Empty candidate or
// reference scores 0. Inputs should already be passed through
// StripForScoring.
double Bleu(std::string_view reference, std::string_view candidate);

// Character n-gram F-score with beta = 2 and n = 1..6, whitespace removed.
// Precision and recall are averaged over the orders for which both sides
// have n-grams, then combined.
double Chrf(std::string_view reference, std::string_view candidate);

inline constexpr int kChrfMaxOrder = 6;
inline constexpr double kChrfBeta = 2.0;
inline constexpr int kBleuMaxOrder = 4;

// Fraction of true outcomes. Throws std::invalid_argument on an empty list.
double AttackSuccessRate(const std::vector<bool>& fooled);

}  // namespace badenc

#endif  // BADENC_METRICS_H_
