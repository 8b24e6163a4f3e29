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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bildos/actions.hpp"
#include "bildos/intent_store.hpp"
#include "bildos/language.hpp"

namespace bildos {

enum class MatchStrategy { word, phrase };

constexpr std::string_view to_string(MatchStrategy s) { return s == MatchStrategy::word ? "word" : "phrase"; }
std::optional<MatchStrategy> parse_strategy(std::string_view s);

// Value written into a slot the user declined.
inline constexpr std::string_view kNothing = "Nothing";

struct DeclineLexicon {
  std::vector<std::string> phrases{"no", "nope", "no thanks", "nothing"};
};

// True when the utterance's leading tokens spell a decline phrase.
bool is_decline(std::string_view utterance_en, const DeclineLexicon& decline);

struct Detection {
  std::optional<std::string> intent;
  std::optional<std::string> keyword;
  bool decline = false;
  bool unseen = false;
};

struct DetectOptions {
  MatchStrategy strategy = MatchStrategy::phrase;
  DeclineLexicon decline{};
  // Used to resolve a keyword listed under several intents.
  std::optional<std::string> last_request;
};

// Keyword detection over an English utterance.
//
// phrase: the keyword occurs in the lowercased utterance and is not glued to
//         letters or digits on either side ("chinese" does not contain "hi").
// word:   the utterance is split on whitespace and punctuation; the keyword's
//         whitespace-separated words must appear as consecutive tokens. A
//         keyword whose words contain punctuation ("9-grain wheat") therefore
//         never matches under this strategy.
//
// Among matches the longest keyword (in code points) wins, then an intent
// whose name appears in the utterance, then last_request, then slot order,
// then auxiliary intents by name.
Detection detect(std::string_view utterance_en, const MenuCatalog& catalog, const DetectOptions& options = {});

struct SlotValue {
  std::string slot;
  std::optional<std::string> value;
};

struct PendingAnnotation {
  std::string utterance;  // English text that failed detection
  int question = 1;
  std::string intent;  // answer to question 1
};

struct DialogueState {
  std::vector<SlotValue> slots;  // always kSlotOrder, in order
  std::optional<std::string> last_request;
  int turn_count = 0;
  LanguageTag last_language = LanguageTag::en;
  std::optional<PendingAnnotation> pending_annotation;
  bool completed = false;
  bool terminated = false;

  static DialogueState initial();

  const std::optional<std::string>& value(std::string_view slot) const;
  void fill(std::string_view slot, std::string value);
  std::optional<std::string> first_unfilled() const;
  bool all_filled() const;
};

struct DialoguePolicy {
  int num_of_turns = 30;
};

struct Decision {
  SystemAction action;
  DialogueState state;
};

// Slot-filling policy for one detection. Does not touch turn_count; a state
// whose budget is already spent yields Terminate.
Decision next_action(const DialogueState& state, const Detection& det, const DialoguePolicy& policy = {});

// Applies both annotation answers: stores the keyword, clears the pending
// annotation and re-runs detection on the stored utterance. An empty keyword
// re-issues question 2 with the state unchanged. PersistenceFailure
// propagates and leaves the caller's state untouched.
Decision record_annotation(const DialogueState& state, std::string_view intent, std::string_view keyword,
                           IntentStore& store, const DetectOptions& options, const DialoguePolicy& policy = {});

// Throws NotCompleted unless every slot is filled.
OrderSummary conclude(const DialogueState& state);

}  // namespace bildos
