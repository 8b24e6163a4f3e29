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

#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bildos/session.hpp"

namespace bildos {

using AnnotationAnswer = std::pair<std::string, std::string>;  // (intent, keyword)

struct ScriptedDialogue {
  std::string id;
  std::vector<std::string> turns;
  // Slot -> value the user is ordering; nullopt means "incomplete" is expected.
  std::optional<std::map<std::string, std::string>> expected_order;
  std::vector<AnnotationAnswer> annotations;
};

// One JSON object per line:
//   {"id": "...", "turns": ["..."], "expected_order": {...} | "incomplete",
//    "annotations": [["bread", "japanese bread"]]}
// Throws CorpusFormatError with the offending line number.
std::vector<ScriptedDialogue> parse_corpus(std::string_view jsonl);
std::vector<ScriptedDialogue> load_corpus(const std::filesystem::path& path);

struct DriveResult {
  int annotation_prompts = 0;
  int annotations_used = 0;
};

// Feeds scripted turns into a session until it ends or the script runs out.
// Whenever the system asks the first annotation question the next queued
// answer pair is supplied; with none left the driver declines to annotate.
DriveResult drive(Session& session, const std::vector<std::string>& turns, std::deque<AnnotationAnswer> answers);

struct DialogueResult {
  std::string id;
  bool passed = false;
  bool concluded = false;
  bool expected_incomplete = false;
  SessionStatus status = SessionStatus::open;
  int turns = 0;
  int annotation_prompts = 0;
  std::vector<SlotValue> slots;
};

struct CorpusReport {
  MatchStrategy strategy = MatchStrategy::phrase;
  std::vector<DialogueResult> results;  // sorted by id
  std::size_t failures = 0;
  double failure_rate = 0.0;

  nlohmann::json to_json() const;
  std::string table() const;
};

struct SimSetup {
  std::shared_ptr<const Engine> engine;
  std::filesystem::path intents_dir;  // never modified
  SessionConfig session{};            // backend is forced to "lexicon"
};

// Each dialogue runs in a fresh session against its own copy of the intent
// directory. A dialogue fails when it does not conclude or concludes with
// values that differ from expected_order.
CorpusReport run_corpus(const std::vector<ScriptedDialogue>& corpus, MatchStrategy strategy, const SimSetup& setup);

enum class RunOutcome { clean_pass, annotated_pass, fail };
std::string_view to_string(RunOutcome o);

// Runs the same dialogue `repetitions` times against one sandbox copy of the
// intent directory, so annotations from earlier runs carry over.
std::vector<RunOutcome> run_learning_curve(const ScriptedDialogue& dialogue, int repetitions, MatchStrategy strategy,
                                           const SimSetup& setup);

// Temporary directory removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(std::string_view tag = "bildos");
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void copy_directory(const std::filesystem::path& from, const std::filesystem::path& to);

}  // namespace bildos
