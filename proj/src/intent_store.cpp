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

#include "bildos/intent_store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bildos/errors.hpp"
#include "bildos/text.hpp"

namespace bildos {

namespace fs = std::filesystem;

std::optional<std::size_t> slot_index(std::string_view intent) {
  for (std::size_t i = 0; i < kSlotOrder.size(); ++i) {
    if (kSlotOrder[i] == intent) return i;
  }
  return std::nullopt;
}

bool is_valid_intent_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

std::string normalize_keyword(std::string_view keyword) {
  return text::to_lower(text::squeeze_spaces(keyword));
}

bool IntentEntry::contains(std::string_view normalized_keyword) const {
  return std::find(keywords.begin(), keywords.end(), normalized_keyword) != keywords.end();
}

const IntentEntry* MenuCatalog::find(std::string_view intent) const {
  auto it = entries_.find(intent);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> MenuCatalog::aux_intents() const {
  std::vector<std::string> names;
  for (const auto& [name, entry] : entries_) {
    if (!is_slot(name)) names.push_back(name);
  }
  return names;
}

bool MenuCatalog::add_keyword(std::string_view intent, std::string_view keyword) {
  auto it = entries_.find(intent);
  if (it == entries_.end()) {
    it = entries_.emplace(std::string(intent), IntentEntry{std::string(intent), {}}).first;
  }
  std::string kw = normalize_keyword(keyword);
  if (kw.empty() || it->second.contains(kw)) return false;
  it->second.keywords.push_back(std::move(kw));
  return true;
}

namespace {

IntentEntry read_intent_file(const fs::path& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedFile(path.string(), 0, "cannot open");
  IntentEntry entry{std::move(name), {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!text::is_valid_utf8(line)) throw MalformedFile(path.string(), line_no, "invalid UTF-8");
    if (text::has_control_chars(line)) throw MalformedFile(path.string(), line_no, "control character");
    std::string kw = normalize_keyword(line);
    if (kw.empty() || entry.contains(kw)) continue;
    entry.keywords.push_back(std::move(kw));
  }
  return entry;
}

bool ends_with_newline(const fs::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) return true;
  const auto size = in.tellg();
  if (size <= 0) return true;
  in.seekg(-1, std::ios::end);
  char last = 0;
  in.get(last);
  return last == '\n';
}

}  // namespace

MenuCatalog load_catalog(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ConfigError("intent directory not found: " + dir.string());
  for (std::string_view slot : kSlotOrder) {
    if (!fs::is_regular_file(dir / (std::string(slot) + ".txt"), ec)) throw MissingSlotFile(std::string(slot));
  }

  // Sorted so that the result does not depend on directory listing order.
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".txt") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());

  MenuCatalog catalog;
  for (const auto& path : files) {
    std::string stem = path.stem().string();
    if (!is_valid_intent_name(stem)) continue;
    IntentEntry entry = read_intent_file(path, stem);
    if (entry.keywords.empty()) {
      // Keep empty intents visible (a slot may legitimately start empty).
      catalog.add_keyword(stem, "");
    }
    for (const auto& kw : entry.keywords) catalog.add_keyword(stem, kw);
  }
  return catalog;
}

void save_catalog(const MenuCatalog& catalog, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const auto& [name, entry] : catalog.entries()) {
    const fs::path path = dir / (name + ".txt");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    for (const auto& kw : entry.keywords) out << kw << '\n';
    out.flush();
    if (!out) throw PersistenceFailure("cannot write " + path.string());
  }
}

IntentStore::IntentStore(fs::path dir)
    : dir_(std::move(dir)), snapshot_(std::make_shared<const MenuCatalog>(load_catalog(dir_))) {}

std::shared_ptr<const MenuCatalog> IntentStore::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return snapshot_;
}

bool IntentStore::append_keyword(std::string_view intent, std::string_view keyword) {
  if (!is_valid_intent_name(intent)) throw InvalidArgument("invalid intent name: '" + std::string(intent) + "'");
  const std::string kw = normalize_keyword(keyword);
  if (kw.empty()) throw InvalidArgument("empty keyword");
  if (!text::is_valid_utf8(kw) || text::has_control_chars(kw)) throw InvalidArgument("keyword is not clean text");

  std::lock_guard writer(write_mu_);
  auto current = snapshot();
  if (const IntentEntry* entry = current->find(intent); entry && entry->contains(kw)) return false;

  const fs::path path = dir_ / (std::string(intent) + ".txt");
  const bool needs_separator = !ends_with_newline(path);
  {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw PersistenceFailure("cannot open " + path.string() + " for append");
    if (needs_separator) out << '\n';
    out << kw << '\n';
    out.flush();
    if (!out) throw PersistenceFailure("write failed: " + path.string());
  }

  auto next = std::make_shared<MenuCatalog>(*current);
  next->add_keyword(intent, kw);
  std::lock_guard lock(snapshot_mu_);
  snapshot_ = std::move(next);
  return true;
}

}  // namespace bildos
