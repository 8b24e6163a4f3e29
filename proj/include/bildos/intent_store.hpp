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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bildos {

// The fixed ordering story. Every slot has a file `<slot>.txt` in the
// intent directory.
inline constexpr std::array<std::string_view, 5> kSlotOrder{"bread", "cheese", "vegetable", "sauce", "extra"};
inline constexpr std::string_view kGreetIntent = "greet";

std::optional<std::size_t> slot_index(std::string_view intent);
inline bool is_slot(std::string_view intent) { return slot_index(intent).has_value(); }

// [a-z0-9_-]+
bool is_valid_intent_name(std::string_view name);

// Trim, collapse inner whitespace, lowercase.
std::string normalize_keyword(std::string_view keyword);

struct IntentEntry {
  std::string name;
  std::vector<std::string> keywords;  // normalized, unique, file order

  bool contains(std::string_view normalized_keyword) const;
};

class MenuCatalog {
 public:
  const IntentEntry* find(std::string_view intent) const;
  const std::map<std::string, IntentEntry, std::less<>>& entries() const { return entries_; }
  // Intents outside the slot order, by name.
  std::vector<std::string> aux_intents() const;

  // Adds (normalized) keyword; false if it was already there. Creates the
  // intent when missing.
  bool add_keyword(std::string_view intent, std::string_view keyword);

 private:
  std::map<std::string, IntentEntry, std::less<>> entries_;
};

// One entry per `*.txt` file whose stem is a valid intent name; other files
// are ignored. Throws MissingSlotFile when a slot file is absent and
// MalformedFile for undecodable lines.
MenuCatalog load_catalog(const std::filesystem::path& dir);

// Writes every entry as `<intent>.txt`, one keyword per line, LF, trailing
// newline. Throws PersistenceFailure.
void save_catalog(const MenuCatalog& catalog, const std::filesystem::path& dir);

// File-backed catalog shared by all sessions. Readers take immutable
// snapshots; writes go through a single writer and publish a new snapshot.
class IntentStore {
 public:
  explicit IntentStore(std::filesystem::path dir);

  std::shared_ptr<const MenuCatalog> snapshot() const;

  // Appends the normalized keyword to `<intent>.txt` (created if needed).
  // Returns false when it was already present. Throws InvalidArgument for an
  // empty keyword or bad intent name, PersistenceFailure on I/O errors.
  bool append_keyword(std::string_view intent, std::string_view keyword);

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex write_mu_;
  mutable std::mutex snapshot_mu_;
  std::shared_ptr<const MenuCatalog> snapshot_;
};

}  // namespace bildos
