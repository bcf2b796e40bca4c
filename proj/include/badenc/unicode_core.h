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

#ifndef BADENC_UNICODE_CORE_H_
#define BADENC_UNICODE_CORE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace badenc {

enum class CharClass {
  kBenign,
  kInvisibleFormat,
  kBidiControl,
  kDeletionControl,
  kHomoglyphConfusable,
};

std::string_view CharClassName(CharClass kind);

inline constexpr char32_t kZwsp = 0x200B;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kRlo = 0x202E;
inline constexpr char32_t kPdf = 0x202C;
inline constexpr char32_t kBackspace = 0x0008;
inline constexpr char32_t kDelete = 0x007F;

// Fixed allowlists; membership does not depend on the Unicode version of the
// host library.
bool IsInvisibleFormat(char32_t c);
bool IsBidiControl(char32_t c);
bool IsDeletionControl(char32_t c);

class HomoglyphTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical character -> ordered confusables, plus the reverse function.
// The first confusable of each entry is the curated low-artifact choice.
class HomoglyphTable {
 public:
  // Parses the JSON schema {"d": ["ԁ", ...], ...}. Rejects entries that
  // would make the reverse mapping ambiguous or the table deeper than one
  // level.
  static HomoglyphTable FromJson(std::string_view json);
  static HomoglyphTable FromFile(const std::string& path);

  // The table shipped in data/homoglyphs.json, compiled in.
  static const HomoglyphTable& Default();

  // Empty span when `canonical` has no entry.
  std::span<const char32_t> ConfusablesOf(char32_t canonical) const;
  std::optional<char32_t> CanonicalOf(char32_t c) const;
  bool IsConfusable(char32_t c) const { return reverse_.contains(c); }

  const std::map<char32_t, std::vector<char32_t>>& entries() const {
    return entries_;
  }
  std::size_t confusable_count() const { return reverse_.size(); }

  std::string ToJson() const;

 private:
  std::map<char32_t, std::vector<char32_t>> entries_;
  std::unordered_map<char32_t, char32_t> reverse_;
};

CharClass Classify(char32_t c,
                   const HomoglyphTable& table = HomoglyphTable::Default());

inline std::optional<char32_t> CanonicalOf(
    char32_t c, const HomoglyphTable& table = HomoglyphTable::Default()) {
  return table.CanonicalOf(c);
}

struct ScanHit {
  std::size_t byte_offset;
  char32_t scalar;
  CharClass kind;

  bool operator==(const ScanHit&) const = default;
};

struct ScanReport {
  std::vector<ScanHit> hits;

  bool clean() const { return hits.empty(); }
  std::string ToJson() const;
};

// Reports every non-benign scalar in order. Throws Utf8Error on malformed
// input.
ScanReport Scan(std::string_view text,
                const HomoglyphTable& table = HomoglyphTable::Default());

bool IsScanClean(std::u32string_view text,
                 const HomoglyphTable& table = HomoglyphTable::Default());

}  // namespace badenc

#endif  // BADENC_UNICODE_CORE_H_
