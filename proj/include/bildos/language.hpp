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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace bildos {

enum class LanguageTag { en, zh };

// Identifier of the supported language pair.
inline constexpr std::string_view kSupportedPair = "en_zh";

constexpr std::string_view to_string(LanguageTag tag) { return tag == LanguageTag::zh ? "zh" : "en"; }
std::optional<LanguageTag> parse_language(std::string_view code);

struct CodePointRange {
  char32_t first;
  char32_t last;
};

// CJK Unified Ideographs, Extension A, and Compatibility Ideographs. Widen
// here to cover the supplementary-plane extensions.
inline constexpr std::array<CodePointRange, 3> kCjkRanges{{
    {0x4E00, 0x9FFF},
    {0x3400, 0x4DBF},
    {0xF900, 0xFAFF},
}};

constexpr bool is_cjk(char32_t cp) {
  for (const auto& r : kCjkRanges) {
    if (cp >= r.first && cp <= r.last) return true;
  }
  return false;
}

bool contains_cjk(std::string_view utf8);

struct Utterance {
  std::string text;
  std::size_t turn_index = 0;
};

// "zh" as soon as one ideograph shows up, "en" otherwise (including empty
// text). Pure.
LanguageTag detect_language(std::string_view text);
inline LanguageTag detect_language(const Utterance& u) { return detect_language(u.text); }

}  // namespace bildos
