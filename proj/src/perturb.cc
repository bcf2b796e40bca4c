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

#include "badenc/perturb.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "badenc/rng.h"
#include "badenc/utf8.h"

namespace badenc {
namespace {

constexpr std::pair<Technique, std::string_view> kNames[] = {
    {Technique::kBase, "base"},   {Technique::kZwsp, "zwsp"},
    {Technique::kZwnj, "zwnj"},   {Technique::kZwj, "zwj"},
    {Technique::kHomo, "homo"},   {Technique::kHomo2, "homo2"},
    {Technique::kRlo, "rlo"},     {Technique::kBksp, "bksp"},
    {Technique::kDel, "del"},     {Technique::kZwsp2, "zwsp2"},
};

std::u32string InjectionPayload(Technique t) {
  switch (t) {
    case Technique::kZwsp:
      return {kZwsp};
    case Technique::kZwnj:
      return {kZwnj};
    case Technique::kZwj:
      return {kZwj};
    case Technique::kBksp:
      return {U'X', kBackspace};
    case Technique::kDel:
      return {U'X', kDelete};
    default:
      return {};
  }
}

bool IsInjection(Technique t) { return !InjectionPayload(t).empty(); }

void RequireClean(std::u32string_view text, const HomoglyphTable& table) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (Classify(text[i], table) != CharClass::kBenign) {
      throw std::invalid_argument(
          "input is not scan-clean: " + CodePointLabel(text[i]) +
          " at scalar index " + std::to_string(i));
    }
  }
}

bool IsWordSeparator(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f';
}

std::vector<PerturbationSite> Zwsp2Sites(std::u32string_view title,
                                         std::uint64_t seed,
                                         std::size_t max_count) {
  if (max_count == 0) {
    throw std::invalid_argument("zwsp2 max count must be positive");
  }
  struct Word {
    std::size_t start;
    std::size_t length;
  };
  std::vector<Word> words;
  for (std::size_t i = 0; i < title.size();) {
    if (IsWordSeparator(title[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < title.size() && !IsWordSeparator(title[j])) ++j;
    words.push_back({i, j - i});
    i = j;
  }

  Rng rng(DeriveSeed(seed, "zwsp2"));
  // Offsets inside the word (1..len-1) chosen once per distinct word.
  std::map<std::u32string, std::vector<std::size_t>, std::less<>> placements;
  std::vector<PerturbationSite> sites;
  for (const Word& w : words) {
    std::u32string key(title.substr(w.start, w.length));
    auto it = placements.find(key);
    if (it == placements.end()) {
      const std::size_t slots = w.length - 1;
      const std::size_t drawn = rng.Between(1, max_count);
      const std::size_t count = std::min(drawn, slots);
      std::vector<std::size_t> chosen;
      if (count > 0) {
        for (std::size_t idx : rng.SampleIndices(slots, count)) {
          chosen.push_back(idx + 1);
        }
        std::sort(chosen.begin(), chosen.end());
      }
      it = placements.emplace(std::move(key), std::move(chosen)).first;
    }
    for (std::size_t offset : it->second) {
      PerturbationSite site;
      site.position = w.start + offset;
      site.inserted = {kZwsp};
      sites.push_back(std::move(site));
    }
  }
  return sites;
}

}  // namespace

std::string_view TechniqueName(Technique t) {
  for (const auto& [kind, name] : kNames) {
    if (kind == t) return name;
  }
  return "base";
}

std::optional<Technique> TryParseTechnique(std::string_view name) {
  for (const auto& [kind, n] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

Technique ParseTechnique(std::string_view name) {
  if (auto t = TryParseTechnique(name)) return *t;
  throw std::invalid_argument("unknown perturbation technique: " +
                              std::string(name));
}

std::vector<PerturbationSite> FullObfuscationSites(
    std::u32string_view text, const PerturbationTechnique& t,
    const HomoglyphTable& table) {
  std::vector<PerturbationSite> sites;
  switch (t.kind) {
    case Technique::kBase:
      break;
    case Technique::kZwsp:
    case Technique::kZwnj:
    case Technique::kZwj:
    case Technique::kBksp:
    case Technique::kDel: {
      const std::u32string payload = InjectionPayload(t.kind);
      for (std::size_t slot = 1; slot < text.size(); ++slot) {
        PerturbationSite site;
        site.position = slot;
        site.inserted = payload;
        sites.push_back(std::move(site));
      }
      break;
    }
    case Technique::kHomo:
    case Technique::kHomo2: {
      Rng rng(DeriveSeed(t.seed, "homo"));
      for (std::size_t i = 0; i < text.size(); ++i) {
        auto confusables = table.ConfusablesOf(text[i]);
        if (confusables.empty()) continue;
        PerturbationSite site;
        site.kind = PerturbationSite::Kind::kSubstitution;
        site.position = i;
        site.original = text[i];
        site.replacement = t.kind == Technique::kHomo2
                               ? confusables.front()
                               : confusables[rng.Below(confusables.size())];
        sites.push_back(std::move(site));
      }
      break;
    }
    case Technique::kRlo: {
      PerturbationSite site;
      site.kind = PerturbationSite::Kind::kWrap;
      sites.push_back(std::move(site));
      break;
    }
    case Technique::kZwsp2:
      sites = Zwsp2Sites(text, t.seed, kDefaultZwsp2MaxCount);
      break;
  }
  return sites;
}

std::u32string ApplySites(std::u32string_view text,
                          std::span<const PerturbationSite> sites) {
  std::u32string body(text);
  bool wrap = false;
  // Multiple insertions at one slot are concatenated in site-list order.
  std::vector<std::u32string> extra(text.size() + 1);
  for (const PerturbationSite& site : sites) {
    switch (site.kind) {
      case PerturbationSite::Kind::kInsertion:
        if (site.position > text.size()) {
          throw std::out_of_range("insertion site beyond end of text");
        }
        extra[site.position] += site.inserted;
        break;
      case PerturbationSite::Kind::kSubstitution:
        if (site.position >= text.size()) {
          throw std::out_of_range("substitution site beyond end of text");
        }
        body[site.position] = site.replacement;
        break;
      case PerturbationSite::Kind::kWrap:
        wrap = true;
        break;
    }
  }
  std::u32string out;
  out.reserve(text.size() * 3 + 2);
  for (std::size_t i = 0; i <= text.size(); ++i) {
    out += extra[i];
    if (i < text.size()) out.push_back(body[i]);
  }
  if (wrap) {
    std::reverse(out.begin(), out.end());
    out.insert(out.begin(), kRlo);
    out.push_back(kPdf);
  }
  return out;
}

std::string Obfuscate(std::string_view text, const PerturbationTechnique& t,
                      const HomoglyphTable& table) {
  const std::u32string clean = DecodeUtf8(text);
  RequireClean(clean, table);
  return EncodeUtf8(ApplySites(clean, FullObfuscationSites(clean, t, table)));
}

std::string InjectK(std::string_view text, Technique t, std::size_t k,
                    std::uint64_t seed, const HomoglyphTable& table) {
  if (t == Technique::kRlo) {
    throw std::invalid_argument(
        "rlo is a whole-string transform and cannot be injected partially");
  }
  if (!IsInjection(t) && t != Technique::kHomo) {
    throw std::invalid_argument("technique " + std::string(TechniqueName(t)) +
                                " does not support k-site injection");
  }
  if (k == 0) throw std::invalid_argument("k must be positive");
  const std::u32string clean = DecodeUtf8(text);
  RequireClean(clean, table);

  std::vector<PerturbationSite> sites;
  if (IsInjection(t)) {
    const std::size_t slots = clean.size() + 1;
    if (k > slots) {
      throw std::out_of_range("k=" + std::to_string(k) + " exceeds the " +
                              std::to_string(slots) + " insertion slots");
    }
    std::vector<std::size_t> order(slots);
    for (std::size_t i = 0; i < slots; ++i) order[i] = i;
    Rng(DeriveSeed(seed, "inject.slots")).Shuffle(order);
    const std::u32string payload = InjectionPayload(t);
    for (std::size_t i = 0; i < k; ++i) {
      PerturbationSite site;
      site.position = order[i];
      site.inserted = payload;
      sites.push_back(std::move(site));
    }
  } else {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      if (!table.ConfusablesOf(clean[i]).empty()) candidates.push_back(i);
    }
    if (k > candidates.size()) {
      throw std::out_of_range("k=" + std::to_string(k) + " exceeds the " +
                              std::to_string(candidates.size()) +
                              " characters that have homoglyphs");
    }
    // Glyph choices are drawn per position up front so that the k-prefix
    // property holds independently of the slot order.
    Rng glyphs(DeriveSeed(seed, "inject.glyphs"));
    std::vector<char32_t> replacement(clean.size(), 0);
    for (std::size_t i : candidates) {
      auto confusables = table.ConfusablesOf(clean[i]);
      replacement[i] = confusables[glyphs.Below(confusables.size())];
    }
    Rng(DeriveSeed(seed, "inject.slots")).Shuffle(candidates);
    for (std::size_t i = 0; i < k; ++i) {
      PerturbationSite site;
      site.kind = PerturbationSite::Kind::kSubstitution;
      site.position = candidates[i];
      site.original = clean[candidates[i]];
      site.replacement = replacement[candidates[i]];
      sites.push_back(std::move(site));
    }
  }
  return EncodeUtf8(ApplySites(clean, sites));
}

std::string Zwsp2Title(std::string_view title, std::uint64_t seed,
                       std::size_t max_count) {
  const std::u32string clean = DecodeUtf8(title);
  RequireClean(clean, HomoglyphTable::Default());
  return EncodeUtf8(ApplySites(clean, Zwsp2Sites(clean, seed, max_count)));
}

std::string RloWordPerturb(std::string_view text, std::uint64_t seed,
                           const HomoglyphTable& table) {
  const std::u32string clean = DecodeUtf8(text);
  RequireClean(clean, table);
  std::vector<std::pair<std::size_t, std::size_t>> words;
  for (std::size_t i = 0; i < clean.size();) {
    if (IsWordSeparator(clean[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < clean.size() && !IsWordSeparator(clean[j])) ++j;
    words.emplace_back(i, j - i);
    i = j;
  }
  if (words.empty()) throw std::out_of_range("text has no word to wrap");
  const auto [start, length] =
      words[Rng(DeriveSeed(seed, "rlo.word")).Below(words.size())];
  const PerturbationSite wrap{PerturbationSite::Kind::kWrap, 0, {}, 0, 0};
  std::u32string out(clean.substr(0, start));
  out += ApplySites(clean.substr(start, length), std::span(&wrap, 1));
  out += clean.substr(start + length);
  return EncodeUtf8(out);
}

}  // namespace badenc
