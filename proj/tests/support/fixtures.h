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

#ifndef BADENC_TESTS_SUPPORT_FIXTURES_H_
#define BADENC_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "badenc/corpus.h"

namespace badenc::testing {

// Deterministic encyclopedia-style corpus. Every title opens with a
// pseudo-word unique to its article. No word in the vocabulary is a
// palindrome or the reversal of another word, so reversed text never shares
// a term with clean text.
std::vector<SourceDoc> SyntheticCorpus(std::size_t docs, std::uint64_t seed,
                                       std::size_t sentences_per_doc = 8);

// Short keyword queries drawn from article bodies.
std::vector<std::string> SyntheticQueries(const std::vector<SourceDoc>& corpus,
                                          std::size_t count, std::uint64_t seed);

// Random printable-ASCII strings with lengths in [0, max_length].
std::vector<std::string> RandomAsciiStrings(std::size_t count,
                                            std::size_t max_length,
                                            std::uint64_t seed);

// The 50-line quotes file under tests/data.
std::vector<std::string> Quotes();

}  // namespace badenc::testing

#endif  // BADENC_TESTS_SUPPORT_FIXTURES_H_
