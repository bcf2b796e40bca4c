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

#include "badenc/config.h"

#include <charconv>
#include <fstream>
#include <istream>

namespace badenc {
namespace {

std::string Strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T ParseNumber(const std::string& value, std::size_t line) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config line " + std::to_string(line) +
                      ": bad number \"" + value + "\"");
  }
  return out;
}

std::size_t ParsePositive(const std::string& value, std::size_t line) {
  const auto v = ParseNumber<std::size_t>(value, line);
  if (v == 0) {
    throw ConfigError("config line " + std::to_string(line) +
                      ": value must be positive");
  }
  return v;
}

}  // namespace

void Config::Merge(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string text = Strip(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line) +
                        ": expected key = value");
    }
    const std::string key = Strip(text.substr(0, eq));
    const std::string value = Strip(text.substr(eq + 1));
    if (key == "homoglyph_table") {
      homoglyph_table = value;
    } else if (key == "bm25_k1") {
      bm25.k1 = ParseNumber<double>(value, line);
    } else if (key == "bm25_b") {
      bm25.b = ParseNumber<double>(value, line);
    } else if (key == "mikado_p") {
      mikado_p = ParsePositive(value, line);
    } else if (key == "mikado_n") {
      mikado_n = ParsePositive(value, line);
    } else if (key == "mikado_b") {
      mikado_b = ParseNumber<double>(value, line);
      if (mikado_b < 0.0 || mikado_b > 1.0) {
        throw ConfigError("config line " + std::to_string(line) +
                          ": mikado_b must lie in [0, 1]");
      }
    } else if (key == "serp_size") {
      serp_size = ParsePositive(value, line);
    } else if (key == "summary_sentences") {
      summary_sentences = ParsePositive(value, line);
    } else {
      throw ConfigError("config line " + std::to_string(line) +
                        ": unknown key \"" + key + "\"");
    }
  }
}

void Config::MergeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  Merge(in);
}

}  // namespace badenc
