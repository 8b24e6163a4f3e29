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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bildos/actions.hpp"
#include "bildos/translator.hpp"

namespace bildos {

// Template kinds, one template per kind and language.
inline constexpr std::array<std::string_view, 7> kTemplateKinds{
    "greet", "request", "confirm", "annotate1", "annotate2", "conclude", "terminate"};

// Placeholders a kind may use.
const std::vector<std::string_view>& allowed_placeholders(std::string_view kind);

// Key/value file, one `key = value` per line, '#' comments:
//
//   <kind>.<lang> = template text with {placeholders}
//   suffix.<slot> = noun appended to values of that slot ("italian" -> "italian bread")
//   display.<term> = surface spelling of a keyword ("italian" -> "Italian")
class TemplateTable {
 public:
  static TemplateTable load(const std::filesystem::path& path);
  // Throws MalformedFile on syntax errors or unknown placeholders and
  // MissingTemplate when a (kind, language) pair has no template.
  static TemplateTable parse(std::string_view content, const std::string& origin = "<templates>");

  const std::string& get(std::string_view kind, LanguageTag lang) const;

  // English surface form of a slot value: display spelling plus slot suffix.
  std::string display_value(std::string_view slot, std::string_view value) const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
  std::map<std::string, std::string, std::less<>> suffixes_;
  std::map<std::string, std::string, std::less<>> display_;
};

struct NlgOptions {
  // Annotation prompts are English-only unless this is set.
  bool zh_annotation_prompts = false;
};

std::string render(const SystemAction& action, const TemplateTable& templates, const BilingualLexicon& lexicon,
                   const NlgOptions& options = {});

// Substitutes {name} from `values` in one pass; unknown names are kept.
std::string fill_placeholders(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& values);

}  // namespace bildos
