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

#ifndef BADENC_SANITIZE_H_
#define BADENC_SANITIZE_H_

#include <string>
#include <string_view>

#include "badenc/unicode_core.h"

namespace badenc {

// Restores canonical text: drops invisible format characters, applies
// deletion controls (each erases itself and the preceding scalar), resolves
// RLO...PDF spans innermost-first by re-reversing their content, drops any
// other bidi control, then maps homoglyphs to canonicals. The result is
// always scan-clean.
std::u32string Sanitize(std::u32string_view text,
                        const HomoglyphTable& table = HomoglyphTable::Default());
std::string Sanitize(std::string_view text,
                     const HomoglyphTable& table = HomoglyphTable::Default());

// Sanitize without bidi re-reversal: every bidi control is dropped and the
// logical order is left alone. Used before similarity scoring, where
// summarizer output may have separated an override from its terminator.
std::u32string StripForScoring(
    std::u32string_view text,
    const HomoglyphTable& table = HomoglyphTable::Default());
std::string StripForScoring(
    std::string_view text,
    const HomoglyphTable& table = HomoglyphTable::Default());

}  // namespace badenc

#endif  // BADENC_SANITIZE_H_
