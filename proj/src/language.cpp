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

#include "bildos/language.hpp"

#include "bildos/text.hpp"

namespace bildos {

std::optional<LanguageTag> parse_language(std::string_view code) {
  if (code == "en") return LanguageTag::en;
  if (code == "zh") return LanguageTag::zh;
  return std::nullopt;
}

bool contains_cjk(std::string_view utf8) {
  for (char32_t cp : text::decode_utf8(utf8)) {
    if (is_cjk(cp)) return true;
  }
  return false;
}

LanguageTag detect_language(std::string_view text) {
  return contains_cjk(text) ? LanguageTag::zh : LanguageTag::en;
}

}  // namespace bildos
