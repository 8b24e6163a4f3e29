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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bildos/actions.hpp"
#include "bildos/dialogue_manager.hpp"
#include "bildos/errors.hpp"
#include "bildos/evaluator.hpp"
#include "bildos/intent_store.hpp"
#include "bildos/nlg.hpp"
#include "bildos/translator.hpp"

namespace bildos {

class SessionStillOpen : public Error {
 public:
  SessionStillOpen() : Error("conversation has not ended yet") {}
};

struct SessionConfig {
  int num_of_turns = 30;
  std::string backend{kLexiconBackend};
  MatchStrategy strategy = MatchStrategy::phrase;
  EvalConfig eval{};
  std::string user_id = "anonymous";
  std::filesystem::path scores_dir;  // empty: scores are not persisted
};

// Throws InvalidArgument for a non-positive budget, an unregistered backend,
// a bad user id or a bad EvalConfig.
void validate(const SessionConfig& cfg, const Translator& translator);

// Resources shared by every session of a process.
struct Engine {
  std::shared_ptr<const BilingualLexicon> lexicon;
  std::shared_ptr<Translator> translator;
  std::shared_ptr<const TemplateTable> templates;
  DeclineLexicon decline{};
  NlgOptions nlg{};
};

std::shared_ptr<Engine> load_engine(const std::filesystem::path& lexicon_file,
                                    const std::filesystem::path& templates_file);

enum class Speaker { user, system };

struct TranscriptEntry {
  Speaker speaker = Speaker::user;
  std::string text;
  LanguageTag language = LanguageTag::en;
  ColorRole role = ColorRole::neutral;
  std::string timestamp;
};
using Transcript = std::vector<TranscriptEntry>;

struct RenderedMessage {
  std::string text;
  ColorRole role = ColorRole::neutral;
  LanguageTag language = LanguageTag::en;
};

enum class SessionStatus { open, concluded, terminated, closed };
std::string_view to_string(SessionStatus s);

// One conversation. Not thread-safe; callers serialize access per session.
class Session {
 public:
  Session(SessionConfig config, std::shared_ptr<const Engine> engine, std::shared_ptr<IntentStore> store);

  // One user turn: language detection, translation (lexicon fallback),
  // annotation answer routing or detection + policy. Throws SessionClosed
  // once the conversation has ended; never throws for odd input.
  std::vector<SystemAction> step(std::string_view raw_utterance);

  // Supplies both annotation answers at once (the remaining ones when
  // question 2 is already pending). Each consumed answer is a user turn.
  std::vector<SystemAction> answer_annotation(std::string_view intent, std::string_view keyword);

  // Scores the conversation, appends it to the score file and closes the
  // session. Throws SessionStillOpen, OutOfRangeUserScore or SessionClosed.
  ScoreRecord finish(double user_experience);

  std::vector<RenderedMessage> render(const std::vector<SystemAction>& actions) const;

  SessionStatus status() const { return status_; }
  const DialogueState& state() const { return state_; }
  const Transcript& transcript() const { return transcript_; }
  const SessionConfig& config() const { return config_; }
  bool annotation_pending() const { return state_.pending_annotation.has_value(); }
  const IntentStore& store() const { return *store_; }

 private:
  SystemAction handle_annotation_answer(const std::string& english);
  void record_system(const std::vector<SystemAction>& actions);

  SessionConfig config_;
  std::shared_ptr<const Engine> engine_;
  std::shared_ptr<IntentStore> store_;
  DialogueState state_;
  Transcript transcript_;
  SessionStatus status_ = SessionStatus::open;
};

}  // namespace bildos
