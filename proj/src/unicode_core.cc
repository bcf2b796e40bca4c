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

#include "badenc/unicode_core.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "badenc/utf8.h"
#include "json.hpp"

namespace badenc {
namespace internal {
extern const std::string_view kDefaultHomoglyphJson;
}  // namespace internal

namespace {

constexpr std::array<char32_t, 12> kInvisibleFormat = {
    0x00AD, 0x034F, 0x180E, 0x200B, 0x200C, 0x200D,
    0x2060, 0x2061, 0x2062, 0x2063, 0x2064, 0xFEFF,
};

constexpr std::array<char32_t, 12> kBidiControls = {
    0x061C, 0x200E, 0x200F, 0x202A, 0x202B, 0x202C,
    0x202D, 0x202E, 0x2066, 0x2067, 0x2068, 0x2069,
};

template <std::size_t N>
bool Contains(const std::array<char32_t, N>& sorted, char32_t c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

char32_t SingleScalar(const std::string& s, std::string_view what) {
  std::u32string decoded;
  try {
    decoded = DecodeUtf8(s);
  } catch (const Utf8Error& e) {
    throw HomoglyphTableError(std::string(what) + ": " + e.what());
  }
  if (decoded.size() != 1) {
    throw HomoglyphTableError(std::string(what) +
                              " must be a single character, got \"" + s + "\"");
  }
  return decoded[0];
}

}  // namespace

std::string_view CharClassName(CharClass kind) {
  switch (kind) {
    case CharClass::kBenign:
      return "Benign";
    case CharClass::kInvisibleFormat:
      return "InvisibleFormat";
    case CharClass::kBidiControl:
      return "BidiControl";
    case CharClass::kDeletionControl:
      return "DeletionControl";
    case CharClass::kHomoglyphConfusable:
      return "HomoglyphConfusable";
  }
  return "Benign";
}

bool IsInvisibleFormat(char32_t c) { return Contains(kInvisibleFormat, c); }
bool IsBidiControl(char32_t c) { return Contains(kBidiControls, c); }
bool IsDeletionControl(char32_t c) { return c == kBackspace || c == kDelete; }

HomoglyphTable HomoglyphTable::FromJson(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw HomoglyphTableError(std::string("homoglyph table: ") + e.what());
  }
  if (!doc.is_object()) {
    throw HomoglyphTableError("homoglyph table must be a JSON object");
  }
  HomoglyphTable table;
  for (const auto& [key, value] : doc.items()) {
    const char32_t canonical = SingleScalar(key, "homoglyph table key");
    if (!value.is_array() || value.empty()) {
      throw HomoglyphTableError("homoglyph entry for \"" + key +
                                "\" must be a nonempty array");
    }
    std::vector<char32_t> confusables;
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw HomoglyphTableError("homoglyph entry for \"" + key +
                                  "\" must hold strings");
      }
      confusables.push_back(
          SingleScalar(item.get<std::string>(), "homoglyph confusable"));
    }
    table.entries_.emplace(canonical, std::move(confusables));
  }
  for (const auto& [canonical, confusables] : table.entries_) {
    if (IsInvisibleFormat(canonical) || IsBidiControl(canonical) ||
        IsDeletionControl(canonical)) {
      throw HomoglyphTableError("canonical " + CodePointLabel(canonical) +
                                " is a control or format character");
    }
    for (char32_t c : confusables) {
      if (IsInvisibleFormat(c) || IsBidiControl(c) || IsDeletionControl(c)) {
        throw HomoglyphTableError("confusable " + CodePointLabel(c) +
                                  " is a control or format character");
      }
      if (table.entries_.contains(c)) {
        throw HomoglyphTableError("confusable " + CodePointLabel(c) +
                                  " is itself a canonical character");
      }
      auto [it, inserted] = table.reverse_.emplace(c, canonical);
      if (!inserted && it->second != canonical) {
        throw HomoglyphTableError("confusable " + CodePointLabel(c) +
                                  " listed under two canonicals");
      }
      if (!inserted) {
        throw HomoglyphTableError("confusable " + CodePointLabel(c) +
                                  " listed twice");
      }
    }
  }
  return table;
}

HomoglyphTable HomoglyphTable::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HomoglyphTableError("cannot open homoglyph table " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

const HomoglyphTable& HomoglyphTable::Default() {
  static const HomoglyphTable table = FromJson(internal::kDefaultHomoglyphJson);
  return table;
}

std::span<const char32_t> HomoglyphTable::ConfusablesOf(
    char32_t canonical) const {
  auto it = entries_.find(canonical);
  if (it == entries_.end()) return {};
  return it->second;
}

std::optional<char32_t> HomoglyphTable::CanonicalOf(char32_t c) const {
  auto it = reverse_.find(c);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::string HomoglyphTable::ToJson() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [canonical, confusables] : entries_) {
    auto& arr = doc[EncodeUtf8(std::u32string(1, canonical))];
    arr = nlohmann::json::array();
    for (char32_t c : confusables) arr.push_back(EncodeUtf8(std::u32string(1, c)));
  }
  return doc.dump(1);
}

CharClass Classify(char32_t c, const HomoglyphTable& table) {
  if (IsDeletionControl(c)) return CharClass::kDeletionControl;
  if (IsInvisibleFormat(c)) return CharClass::kInvisibleFormat;
  if (IsBidiControl(c)) return CharClass::kBidiControl;
  if (table.IsConfusable(c)) return CharClass::kHomoglyphConfusable;
  return CharClass::kBenign;
}

ScanReport Scan(std::string_view text, const HomoglyphTable& table) {
  ScanReport report;
  std::size_t offset = 0;
  for (char32_t c : DecodeUtf8(text)) {
    const CharClass kind = Classify(c, table);
    if (kind != CharClass::kBenign) report.hits.push_back({offset, c, kind});
    offset += Utf8Length(c);
  }
  return report;
}

bool IsScanClean(std::u32string_view text, const HomoglyphTable& table) {
  return std::all_of(text.begin(), text.end(), [&](char32_t c) {
    return Classify(c, table) == CharClass::kBenign;
  });
}

std::string ScanReport::ToJson() const {
  nlohmann::json doc;
  doc["clean"] = clean();
  doc["hits"] = nlohmann::json::array();
  for (const ScanHit& hit : hits) {
    doc["hits"].push_back({{"byte_offset", hit.byte_offset},
                           {"code_point", CodePointLabel(hit.scalar)},
                           {"kind", CharClassName(hit.kind)}});
  }
  return doc.dump();
}

}  // namespace badenc
