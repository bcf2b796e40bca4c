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

#include "badenc/sanitize.h"

#include <algorithm>
#include <vector>

#include "badenc/utf8.h"

namespace badenc {
namespace {

constexpr char32_t kLre = 0x202A;
constexpr char32_t kRle = 0x202B;
constexpr char32_t kLro = 0x202D;

bool OpensEmbedding(char32_t c) {
  return c == kLre || c == kRle || c == kLro || c == kRlo;
}

std::u32string DropInvisibleAndApplyDeletions(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (IsInvisibleFormat(c)) continue;
    if (IsDeletionControl(c)) {
      if (!out.empty()) out.pop_back();
      continue;
    }
    out.push_back(c);
  }
  return out;
}

// Embedding openers are tracked on a stack so that a PDF closes the most
// recent one; only a closed RLO reorders its span.
std::u32string ResolveBidi(std::u32string_view text) {
  struct Opener {
    char32_t kind;
    std::size_t start;
  };
  std::u32string out;
  out.reserve(text.size());
  std::vector<Opener> open;
  for (char32_t c : text) {
    if (OpensEmbedding(c)) {
      open.push_back({c, out.size()});
      continue;
    }
    if (c == kPdf) {
      if (open.empty()) continue;
      const Opener top = open.back();
      open.pop_back();
      if (top.kind == kRlo) {
        std::reverse(out.begin() + static_cast<std::ptrdiff_t>(top.start),
                     out.end());
      }
      continue;
    }
    if (IsBidiControl(c)) continue;
    out.push_back(c);
  }
  return out;
}

std::u32string DropBidi(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (!IsBidiControl(c)) out.push_back(c);
  }
  return out;
}

void MapHomoglyphs(std::u32string& text, const HomoglyphTable& table) {
  for (char32_t& c : text) {
    if (auto canonical = table.CanonicalOf(c)) c = *canonical;
  }
}

}  // namespace

std::u32string Sanitize(std::u32string_view text, const HomoglyphTable& table) {
  std::u32string out = ResolveBidi(DropInvisibleAndApplyDeletions(text));
  MapHomoglyphs(out, table);
  return out;
}

std::string Sanitize(std::string_view text, const HomoglyphTable& table) {
  return EncodeUtf8(Sanitize(DecodeUtf8(text), table));
}

std::u32string StripForScoring(std::u32string_view text,
                               const HomoglyphTable& table) {
  std::u32string out = DropBidi(DropInvisibleAndApplyDeletions(text));
  MapHomoglyphs(out, table);
  return out;
}

std::string StripForScoring(std::string_view text,
                            const HomoglyphTable& table) {
  return EncodeUtf8(StripForScoring(DecodeUtf8(text), table));
}

}  // namespace badenc
