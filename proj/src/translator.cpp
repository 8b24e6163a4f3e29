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

#include "bildos/translator.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "bildos/errors.hpp"
#include "bildos/text.hpp"

namespace bildos {

void validate(const TranslationRequest& req) {
  if (req.src == req.dest) throw InvalidArgument("translation source and destination must differ");
}

BilingualLexicon BilingualLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open lexicon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

BilingualLexicon BilingualLexicon::parse(std::string_view content, const std::string& origin) {
  BilingualLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') {
      if (eol == content.size()) break;
      continue;
    }
    if (!text::is_valid_utf8(line)) throw MalformedFile(origin, line_no, "invalid UTF-8");
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw MalformedFile(origin, line_no, "expected zh<TAB>en");
    try {
      lex.add(line.substr(0, tab), line.substr(tab + 1));
    } catch (const InvalidArgument& e) {
      throw MalformedFile(origin, line_no, e.what());
    }
    if (eol == content.size()) break;
  }
  return lex;
}

void BilingualLexicon::add(std::string_view zh_raw, std::string_view en_raw) {
  const std::string zh(text::trim(zh_raw));
  const std::string en = text::to_lower(text::squeeze_spaces(en_raw));
  if (!contains_cjk(zh)) throw InvalidArgument("zh term has no CJK ideograph: '" + zh + "'");
  if (en.empty()) throw InvalidArgument("empty en term for '" + zh + "'");
  const std::u32string key = text::decode_utf8(zh);
  if (auto it = zh_index_.find(key); it != zh_index_.end()) {
    if (it->second == en) return;
    throw InvalidArgument("zh term '" + zh + "' mapped to both '" + it->second + "' and '" + en + "'");
  }
  zh_index_.emplace(key, en);
  en_index_.emplace(en, zh);  // keeps the first variant
  entries_.emplace_back(zh, en);
  max_zh_len_ = std::max(max_zh_len_, key.size());
  if (std::find(en_lengths_.begin(), en_lengths_.end(), en.size()) == en_lengths_.end()) {
    en_lengths_.push_back(en.size());
    std::sort(en_lengths_.rbegin(), en_lengths_.rend());
  }
}

std::optional<std::string> BilingualLexicon::to_en(std::string_view zh) const {
  auto it = zh_index_.find(text::decode_utf8(text::trim(zh)));
  if (it == zh_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> BilingualLexicon::to_zh(std::string_view en) const {
  auto it = en_index_.find(text::to_lower(text::squeeze_spaces(en)));
  if (it == en_index_.end()) return std::nullopt;
  return it->second;
}

std::string BilingualLexicon::translate(const TranslationRequest& req) const {
  validate(req);
  return req.dest == LanguageTag::en ? zh_to_en(req.text) : en_to_zh(req.text);
}

std::string BilingualLexicon::zh_to_en(std::string_view input) const {
  const std::u32string cps = text::decode_utf8(input);
  std::vector<std::string> spans;
  std::u32string run;
  bool replaced = false;

  auto flush_run = [&] {
    const std::string s(text::trim(text::encode_utf8(run)));
    if (!s.empty()) spans.push_back(s);
    run.clear();
  };

  for (std::size_t i = 0; i < cps.size();) {
    bool matched = false;
    const std::size_t longest = std::min(max_zh_len_, cps.size() - i);
    for (std::size_t len = longest; len > 0; --len) {
      auto it = zh_index_.find(cps.substr(i, len));
      if (it != zh_index_.end()) {
        flush_run();
        spans.push_back(it->second);
        i += len;
        matched = replaced = true;
        break;
      }
    }
    if (matched) continue;
    if (const char32_t ascii = text::ascii_punctuation_for(cps[i]); ascii != 0) {
      flush_run();
      if (ascii != U' ') spans.emplace_back(1, static_cast<char>(ascii));
      replaced = true;
    } else {
      run.push_back(cps[i]);
    }
    ++i;
  }
  if (!replaced) return std::string(input);
  flush_run();

  std::string out;
  for (const auto& s : spans) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::string BilingualLexicon::en_to_zh(std::string_view input) const {
  const std::string lower = text::to_lower(input);
  std::string out;
  out.reserve(input.size());
  for (std::size_t i = 0; i < input.size();) {
    const bool at_start = i == 0 || !text::is_word_byte(static_cast<unsigned char>(lower[i - 1]));
    bool matched = false;
    if (at_start) {
      for (std::size_t len : en_lengths_) {
        if (i + len > lower.size()) continue;
        const std::size_t end = i + len;
        if (end < lower.size() && text::is_word_byte(static_cast<unsigned char>(lower[end]))) continue;
        auto it = en_index_.find(lower.substr(i, len));
        if (it != en_index_.end()) {
          out += it->second;
          i = end;
          matched = true;
          break;
        }
      }
    }
    if (!matched) out.push_back(input[i++]);
  }
  return out;
}

Translator::Translator(std::shared_ptr<const BilingualLexicon> lexicon) : lexicon_(std::move(lexicon)) {
  backends_.push_back(std::make_shared<LexiconBackend>(lexicon_));
}

void Translator::register_backend(std::shared_ptr<TranslationBackend> backend) {
  std::unique_lock lock(registry_mu_);
  const std::string name = backend->name();
  for (const auto& b : backends_) {
    if (b->name() == name) throw DuplicateBackend(name);
  }
  backends_.push_back(std::move(backend));
}

std::vector<std::string> Translator::list_backends() const {
  std::shared_lock lock(registry_mu_);
  std::vector<std::string> names;
  names.reserve(backends_.size());
  for (const auto& b : backends_) names.push_back(b->name());
  return names;
}

bool Translator::has_backend(std::string_view name) const { return find(name) != nullptr; }

std::shared_ptr<TranslationBackend> Translator::find(std::string_view name) const {
  std::shared_lock lock(registry_mu_);
  for (const auto& b : backends_) {
    if (b->name() == name) return b;
  }
  return nullptr;
}

std::string Translator::translate(const TranslationRequest& req, std::string_view backend_name) {
  validate(req);
  auto backend = find(backend_name);
  if (!backend) throw UnknownBackend(std::string(backend_name));

  CacheKey key{std::string(backend_name), req.src, req.dest, req.text};
  {
    std::shared_lock lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::string result = backend->translate(req);
  std::unique_lock lock(cache_mu_);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

Translator::Result Translator::translate_with_fallback(const TranslationRequest& req,
                                                       std::string_view backend) {
  try {
    return {translate(req, backend), std::string(backend), false};
  } catch (const BackendUnavailable&) {
    return {translate(req, kLexiconBackend), std::string(kLexiconBackend), true};
  }
}

std::optional<std::string> Translator::reverse_term(std::string_view en_term) const {
  return lexicon_->to_zh(en_term);
}

std::size_t Translator::cache_size() const {
  std::shared_lock lock(cache_mu_);
  return cache_.size();
}

}  // namespace bildos
