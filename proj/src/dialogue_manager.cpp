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

#include "bildos/dialogue_manager.hpp"

#include <algorithm>
#include <tuple>

#include "bildos/errors.hpp"
#include "bildos/text.hpp"

namespace bildos {
namespace {

std::string prepare(std::string_view utterance) { return text::to_lower(text::fold_punctuation(utterance)); }

bool phrase_match(std::string_view haystack, std::string_view keyword) {
  if (keyword.empty()) return false;
  for (std::size_t pos = haystack.find(keyword); pos != std::string_view::npos;
       pos = haystack.find(keyword, pos + 1)) {
    const bool left_ok = pos == 0 || !text::is_word_byte(static_cast<unsigned char>(haystack[pos - 1]));
    const std::size_t end = pos + keyword.size();
    const bool right_ok =
        end == haystack.size() || !text::is_word_byte(static_cast<unsigned char>(haystack[end]));
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool token_match(const std::vector<std::string>& tokens, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > tokens.size()) return false;
  return std::search(tokens.begin(), tokens.end(), needle.begin(), needle.end()) != tokens.end();
}

struct Candidate {
  std::string intent;
  std::string keyword;
  std::size_t length = 0;
};

}  // namespace

std::optional<MatchStrategy> parse_strategy(std::string_view s) {
  if (s == "word") return MatchStrategy::word;
  if (s == "phrase") return MatchStrategy::phrase;
  return std::nullopt;
}

bool is_decline(std::string_view utterance_en, const DeclineLexicon& decline) {
  const auto tokens = text::split_words(prepare(utterance_en));
  for (const auto& phrase : decline.phrases) {
    const auto ptoks = text::split_words(text::to_lower(phrase));
    if (!ptoks.empty() && ptoks.size() <= tokens.size() && std::equal(ptoks.begin(), ptoks.end(), tokens.begin())) {
      return true;
    }
  }
  return false;
}

Detection detect(std::string_view utterance_en, const MenuCatalog& catalog, const DetectOptions& options) {
  Detection det;
  if (is_decline(utterance_en, options.decline)) {
    det.decline = true;
    return det;
  }

  const std::string lower = prepare(utterance_en);
  const auto tokens = text::split_words(lower);

  std::vector<Candidate> candidates;
  for (const auto& [name, entry] : catalog.entries()) {
    for (const auto& kw : entry.keywords) {
      const bool hit = options.strategy == MatchStrategy::phrase ? phrase_match(lower, kw)
                                                                 : token_match(tokens, text::split_whitespace(kw));
      if (hit) candidates.push_back({name, kw, text::code_point_count(kw)});
    }
  }
  if (candidates.empty()) {
    det.unseen = true;
    return det;
  }

  auto named = [&](const std::string& intent) {
    return std::find(tokens.begin(), tokens.end(), intent) != tokens.end();
  };
  // Lower tuple sorts first.
  auto rank = [&](const Candidate& c) {
    const auto idx = slot_index(c.intent);
    return std::make_tuple(-static_cast<long>(c.length), named(c.intent) ? 0 : 1,
                           options.last_request && *options.last_request == c.intent ? 0 : 1,
                           idx ? *idx : kSlotOrder.size(), c.intent, c.keyword);
  };
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [&](const Candidate& a, const Candidate& b) { return rank(a) < rank(b); });
  det.intent = best->intent;
  det.keyword = best->keyword;
  return det;
}

DialogueState DialogueState::initial() {
  DialogueState s;
  for (std::string_view slot : kSlotOrder) s.slots.push_back({std::string(slot), std::nullopt});
  return s;
}

const std::optional<std::string>& DialogueState::value(std::string_view slot) const {
  for (const auto& sv : slots) {
    if (sv.slot == slot) return sv.value;
  }
  throw InvalidArgument("unknown slot: " + std::string(slot));
}

void DialogueState::fill(std::string_view slot, std::string v) {
  for (auto& sv : slots) {
    if (sv.slot == slot) {
      sv.value = std::move(v);
      completed = all_filled();
      return;
    }
  }
  throw InvalidArgument("unknown slot: " + std::string(slot));
}

std::optional<std::string> DialogueState::first_unfilled() const {
  for (const auto& sv : slots) {
    if (!sv.value) return sv.slot;
  }
  return std::nullopt;
}

bool DialogueState::all_filled() const {
  return std::all_of(slots.begin(), slots.end(), [](const SlotValue& sv) { return sv.value.has_value(); });
}

namespace {

// Confirm the fill and ask for the next slot, or wrap up.
Decision after_fill(DialogueState next, const std::string& slot, const std::string& value) {
  if (auto pending = next.first_unfilled()) {
    next.last_request = *pending;
    SystemAction a{action::ConfirmAndRequest{slot, value, *pending}, next.last_language};
    return {std::move(a), std::move(next)};
  }
  next.completed = true;
  next.last_request.reset();
  SystemAction a{action::Conclude{slot, value, conclude(next)}, next.last_language};
  return {std::move(a), std::move(next)};
}

Decision request_first_unfilled(DialogueState next) {
  const std::string slot = next.first_unfilled().value_or(std::string(kSlotOrder.front()));
  next.last_request = slot;
  SystemAction a{action::Request{slot}, next.last_language};
  return {std::move(a), std::move(next)};
}

}  // namespace

Decision next_action(const DialogueState& state, const Detection& det, const DialoguePolicy& policy) {
  DialogueState next = state;
  if (state.completed || state.terminated || state.turn_count > policy.num_of_turns) {
    next.terminated = !state.completed;
    return {SystemAction{action::Terminate{"num_of_turns consumed"}, state.last_language}, std::move(next)};
  }

  if (det.decline) {
    if (!state.last_request) return request_first_unfilled(std::move(next));
    const std::string slot = *state.last_request;
    next.fill(slot, std::string(kNothing));
    return after_fill(std::move(next), slot, std::string(kNothing));
  }

  if (det.unseen || !det.intent) {
    next.pending_annotation = PendingAnnotation{};
    SystemAction a{action::AnnotatePrompt{1, {}, {}}, state.last_language};
    return {std::move(a), std::move(next)};
  }

  const std::string& intent = *det.intent;
  if (is_slot(intent)) {
    next.fill(intent, *det.keyword);
    return after_fill(std::move(next), intent, *det.keyword);
  }
  if (intent == kGreetIntent) {
    const std::string slot = next.first_unfilled().value_or(std::string(kSlotOrder.front()));
    next.last_request = slot;
    SystemAction a{action::Greet{slot}, state.last_language};
    return {std::move(a), std::move(next)};
  }
  // Any other auxiliary intent never fills a slot.
  return request_first_unfilled(std::move(next));
}

Decision record_annotation(const DialogueState& state, std::string_view intent, std::string_view keyword,
                           IntentStore& store, const DetectOptions& options, const DialoguePolicy& policy) {
  if (!state.pending_annotation) throw InvalidArgument("no annotation pending");
  const PendingAnnotation& pending = *state.pending_annotation;

  if (normalize_keyword(keyword).empty()) {
    DialogueState same = state;
    same.pending_annotation->question = 2;
    same.pending_annotation->intent = std::string(intent);
    SystemAction a{action::AnnotatePrompt{2, pending.utterance, std::string(intent)}, state.last_language};
    return {std::move(a), std::move(same)};
  }

  store.append_keyword(intent, keyword);

  DialogueState cleared = state;
  cleared.pending_annotation.reset();
  DetectOptions opts = options;
  opts.last_request = state.last_request;
  const Detection det = detect(pending.utterance, *store.snapshot(), opts);
  if (det.unseen) {
    // The keyword does not occur in the utterance; ask again instead of
    // looping back into annotation.
    return request_first_unfilled(std::move(cleared));
  }
  return next_action(cleared, det, policy);
}

OrderSummary conclude(const DialogueState& state) {
  if (!state.all_filled()) throw NotCompleted();
  OrderSummary out;
  for (const auto& sv : state.slots) out.emplace_back(sv.slot, *sv.value);
  return out;
}

}  // namespace bildos
