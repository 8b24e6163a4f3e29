/* Copyright 2026 The Bildos Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <string>
#include <string_view>
#include <vector>

// UTF-8 and normalization helpers shared by the NLU pipeline.
namespace bildos::text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes UTF-8; each malformed byte becomes U+FFFD.
std::u32string decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);
bool is_valid_utf8(std::string_view s);
std::size_t code_point_count(std::string_view s);

// Lowercases ASCII and Latin-1 letters (enough for menu text such as
// "JALAPEÑO"); everything else is copied through.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Collapses runs of whitespace to one space and trims.
std::string squeeze_spaces(std::string_view s);

// Maps full-width CJK punctuation (U+3000 block and U+FF01..U+FF5E) to the
// ASCII equivalent; returns 0 for code points with no mapping.
char32_t ascii_punctuation_for(char32_t cp);
std::string fold_punctuation(std::string_view s);

// A byte that may be part of a word: ASCII letters and digits, plus every
// byte of a multi-byte sequence.
constexpr bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

// Splits on whitespace and ASCII punctuation. "9-grain, wheat!" gives
// {"9", "grain", "wheat"}.
std::vector<std::string> split_words(std::string_view s);

// Splits on whitespace only; punctuation stays attached to its token.
std::vector<std::string> split_whitespace(std::string_view s);

bool has_control_chars(std::string_view s);

}  // namespace bildos::text
