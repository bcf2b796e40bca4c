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

#ifndef BADENC_CONFIG_H_
#define BADENC_CONFIG_H_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "badenc/minisearch.h"

namespace badenc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults overridable from a flat `key = value` file ('#' starts a comment).
// Keys: homoglyph_table, bm25_k1, bm25_b, mikado_p, mikado_n, mikado_b,
// serp_size, summary_sentences.
struct Config {
  std::string homoglyph_table;
  Bm25Params bm25;
  std::size_t mikado_p = 20;
  std::size_t mikado_n = 250;
  double mikado_b = 0.1;
  std::size_t serp_size = kDefaultSerpSize;
  std::size_t summary_sentences = 3;

  // Applies the file's settings on top of the current values. Unknown keys
  // and malformed values raise ConfigError naming the line.
  void Merge(std::istream& in);
  void MergeFile(const std::string& path);
};

}  // namespace badenc

#endif  // BADENC_CONFIG_H_
