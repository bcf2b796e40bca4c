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

#ifndef BADENC_UTF8_H_
#define BADENC_UTF8_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace badenc {

// Raised for malformed UTF-8. Invalid input is never repaired: a replacement
// character would silently change the perturbation under test.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Strict decoder: rejects overlong forms, surrogates, and values above
// U+10FFFF.
std::u32string DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(std::u32string_view scalars);
void AppendUtf8(char32_t c, std::string& out);

// Number of bytes the scalar occupies in UTF-8.
std::size_t Utf8Length(char32_t c);

bool IsValidUtf8(std::string_view bytes);

// "U+200B" style label.
std::string CodePointLabel(char32_t c);

}  // namespace badenc

#endif  // BADENC_UTF8_H_
