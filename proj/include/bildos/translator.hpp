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

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bildos/language.hpp"

namespace bildos {

struct TranslationRequest {
  LanguageTag src = LanguageTag::zh;
  LanguageTag dest = LanguageTag::en;
  std::string text;
};

// Throws InvalidArgument when src == dest.
void validate(const TranslationRequest& req);

inline constexpr std::string_view kLexiconBackend = "lexicon";

// Offline zh <-> en term table. Each line of the file is `zh<TAB>en`; lines
// starting with '#' and blank lines are skipped. Several zh variants may map
// to one English term; the first one listed is the reverse translation.
class BilingualLexicon {
 public:
  static BilingualLexicon load(const std::filesystem::path& path);
  static BilingualLexicon parse(std::string_view content, const std::string& origin = "<lexicon>");

  // en is lowercased. Throws InvalidArgument if zh has no ideograph, en is
  // empty, or zh is already mapped to a different term.
  void add(std::string_view zh, std::string_view en);

  std::optional<std::string> to_en(std::string_view zh) const;
  std::optional<std::string> to_zh(std::string_view en) const;

  // Greedy left-to-right longest-match replacement.
  //
  // zh -> en: matched terms and full-width punctuation become separate spans
  // joined by single spaces ("羊奶奶酪。" -> "feta cheese ."); unmatched runs
  // pass through. Text with nothing to replace is returned unchanged.
  //
  // en -> zh: case-insensitive, word-bounded, replaced in place.
  std::string translate(const TranslationRequest& req) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string zh_to_en(std::string_view text) const;
  std::string en_to_zh(std::string_view text) const;

  std::vector<std::pair<std::string, std::string>> entries_;
  std::unordered_map<std::u32string, std::string> zh_index_;
  std::unordered_map<std::string, std::string> en_index_;
  std::size_t max_zh_len_ = 0;
  std::vector<std::size_t> en_lengths_;  // distinct byte lengths, descending
};

class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string name() const = 0;
  // Must be safe to call concurrently. Throws BackendUnavailable.
  virtual std::string translate(const TranslationRequest& req) = 0;
};

class LexiconBackend final : public TranslationBackend {
 public:
  explicit LexiconBackend(std::shared_ptr<const BilingualLexicon> lexicon) : lexicon_(std::move(lexicon)) {}
  std::string name() const override { return std::string(kLexiconBackend); }
  std::string translate(const TranslationRequest& req) override { return lexicon_->translate(req); }

 private:
  std::shared_ptr<const BilingualLexicon> lexicon_;
};

// Backend registry plus a process-lifetime result cache. The "lexicon"
// backend is always registered first.
class Translator {
 public:
  explicit Translator(std::shared_ptr<const BilingualLexicon> lexicon);

  void register_backend(std::shared_ptr<TranslationBackend> backend);
  std::vector<std::string> list_backends() const;
  bool has_backend(std::string_view name) const;

  // Throws UnknownBackend or BackendUnavailable.
  std::string translate(const TranslationRequest& req, std::string_view backend);

  struct Result {
    std::string text;
    std::string backend;
    bool fell_back = false;
  };
  // Like translate(), but an unavailable backend degrades to the lexicon.
  Result translate_with_fallback(const TranslationRequest& req, std::string_view backend);

  std::optional<std::string> reverse_term(std::string_view en_term) const;

  const BilingualLexicon& lexicon() const { return *lexicon_; }
  std::size_t cache_size() const;

 private:
  using CacheKey = std::tuple<std::string, LanguageTag, LanguageTag, std::string>;

  std::shared_ptr<TranslationBackend> find(std::string_view name) const;

  std::shared_ptr<const BilingualLexicon> lexicon_;
  mutable std::shared_mutex registry_mu_;
  std::vector<std::shared_ptr<TranslationBackend>> backends_;
  mutable std::shared_mutex cache_mu_;
  std::map<CacheKey, std::string> cache_;
};

}  // namespace bildos
