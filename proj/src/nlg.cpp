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

#include "bildos/nlg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bildos/dialogue_manager.hpp"
#include "bildos/errors.hpp"
#include "bildos/intent_store.hpp"
#include "bildos/text.hpp"
#include "overloaded.hpp"

namespace bildos {

const std::vector<std::string_view>& allowed_placeholders(std::string_view kind) {
  static const std::map<std::string_view, std::vector<std::string_view>> table{
      {"greet", {"next_slot"}},
      {"request", {"slot"}},
      {"confirm", {"slot", "value", "next_slot"}},
      {"annotate1", {"utterance", "intents"}},
      {"annotate2", {"utterance", "intent"}},
      {"conclude", {"slot", "value", "summary", "bread", "cheese", "vegetable", "sauce", "extra"}},
      {"terminate", {"reason"}},
  };
  static const std::vector<std::string_view> none;
  auto it = table.find(kind);
  return it == table.end() ? none : it->second;
}

namespace {

std::vector<std::string> placeholders_in(std::string_view tmpl) {
  std::vector<std::string> names;
  for (std::size_t open = tmpl.find('{'); open != std::string_view::npos; open = tmpl.find('{', open + 1)) {
    const std::size_t close = tmpl.find('}', open);
    if (close == std::string_view::npos) break;
    names.emplace_back(tmpl.substr(open + 1, close - open - 1));
  }
  return names;
}

}  // namespace

TemplateTable TemplateTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open template file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

TemplateTable TemplateTable::parse(std::string_view content, const std::string& origin) {
  TemplateTable table;
  std::istringstream in{std::string(content)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!text::is_valid_utf8(line)) throw MalformedFile(origin, line_no, "invalid UTF-8");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw MalformedFile(origin, line_no, "expected key = value");
    const std::string key(text::trim(line.substr(0, eq)));
    const std::string value(text::trim(line.substr(eq + 1)));
    const std::size_t dot = key.find('.');
    if (dot == std::string::npos) throw MalformedFile(origin, line_no, "key without '.': " + key);
    const std::string head = key.substr(0, dot);
    const std::string tail = key.substr(dot + 1);

    if (head == "suffix") {
      table.suffixes_[tail] = text::to_lower(value);
    } else if (head == "display") {
      table.display_[normalize_keyword(tail)] = value;
    } else {
      if (std::find(kTemplateKinds.begin(), kTemplateKinds.end(), head) == kTemplateKinds.end()) {
        throw MalformedFile(origin, line_no, "unknown template kind: " + head);
      }
      if (!parse_language(tail)) throw MalformedFile(origin, line_no, "unsupported language: " + tail);
      const auto& allowed = allowed_placeholders(head);
      for (const auto& name : placeholders_in(value)) {
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
          throw MalformedFile(origin, line_no, "placeholder {" + name + "} not valid for " + head);
        }
      }
      table.templates_[key] = value;
    }
  }

  for (std::string_view kind : kTemplateKinds) {
    for (LanguageTag lang : {LanguageTag::en, LanguageTag::zh}) {
      const std::string key = std::string(kind) + "." + std::string(to_string(lang));
      if (!table.templates_.count(key)) throw MissingTemplate(origin + ": missing template " + key);
    }
  }
  return table;
}

const std::string& TemplateTable::get(std::string_view kind, LanguageTag lang) const {
  const std::string key = std::string(kind) + "." + std::string(to_string(lang));
  auto it = templates_.find(key);
  if (it == templates_.end()) throw MissingTemplate("missing template " + key);
  return it->second;
}

std::string TemplateTable::display_value(std::string_view slot, std::string_view value) const {
  if (value == kNothing) return std::string(kNothing);
  std::string base(value);
  if (auto it = display_.find(normalize_keyword(value)); it != display_.end()) base = it->second;
  if (auto it = suffixes_.find(slot); it != suffixes_.end() && !it->second.empty()) {
    const std::string lower = text::to_lower(base);
    if (lower.size() < it->second.size() || lower.compare(lower.size() - it->second.size(), std::string::npos,
                                                          it->second) != 0) {
      base += " " + it->second;
    }
  }
  return base;
}

std::string fill_placeholders(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& values) {
  std::string out;
  out.reserve(tmpl.size() + 32);
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const std::size_t close = tmpl.find('}', i);
      if (close != std::string_view::npos) {
        auto it = values.find(tmpl.substr(i + 1, close - i - 1));
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tmpl[i++]);
  }
  return out;
}

namespace {

class Renderer {
 public:
  Renderer(const TemplateTable& t, const BilingualLexicon& lex, LanguageTag lang) : t_(t), lex_(lex), lang_(lang) {}

  std::string slot(std::string_view name) const {
    if (lang_ == LanguageTag::zh) {
      if (auto zh = lex_.to_zh(name)) return *zh;
    }
    return std::string(name);
  }

  std::string value(std::string_view slot_name, std::string_view v) const {
    const std::string display = t_.display_value(slot_name, v);
    if (lang_ == LanguageTag::en) return display;
    if (auto zh = lex_.to_zh(display)) return *zh;
    if (auto zh = lex_.to_zh(v)) return *zh;
    return std::string(v);
  }

  std::string summary(const OrderSummary& order) const {
    std::string out;
    for (const auto& [s, v] : order) {
      if (!out.empty()) out += lang_ == LanguageTag::zh ? "，" : ", ";
      out += value(s, v) + (lang_ == LanguageTag::zh ? "作为" : " as ") + slot(s);
    }
    return out;
  }

 private:
  const TemplateTable& t_;
  const BilingualLexicon& lex_;
  LanguageTag lang_;
};

std::string intent_list() {
  std::string out;
  for (std::string_view s : kSlotOrder) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

std::string render(const SystemAction& action, const TemplateTable& templates, const BilingualLexicon& lexicon,
                   const NlgOptions& options) {
  LanguageTag lang = action.language;
  if (action.is<action::AnnotatePrompt>() && !options.zh_annotation_prompts) lang = LanguageTag::en;
  const Renderer r(templates, lexicon, lang);

  std::map<std::string, std::string, std::less<>> values;
  std::visit(detail::overloaded{
                 [&](const action::Greet& a) { values["next_slot"] = r.slot(a.next_slot); },
                 [&](const action::Request& a) { values["slot"] = r.slot(a.slot); },
                 [&](const action::ConfirmAndRequest& a) {
                   values["slot"] = r.slot(a.filled_slot);
                   values["value"] = r.value(a.filled_slot, a.filled_value);
                   values["next_slot"] = r.slot(a.next_slot);
                 },
                 [&](const action::AnnotatePrompt& a) {
                   values["utterance"] = a.utterance;
                   values["intents"] = intent_list();
                   values["intent"] = r.slot(a.intent);
                 },
                 [&](const action::Conclude& a) {
                   values["slot"] = r.slot(a.filled_slot);
                   values["value"] = r.value(a.filled_slot, a.filled_value);
                   values["summary"] = r.summary(a.summary);
                   for (const auto& [s, v] : a.summary) values[s] = r.value(s, v);
                 },
                 [&](const action::Terminate& a) { values["reason"] = a.reason; },
             },
             action.kind);
  return fill_placeholders(templates.get(template_key(action), lang), values);
}

}  // namespace bildos
