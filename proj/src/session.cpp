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

#include "bildos/session.hpp"

#include <algorithm>

#include "bildos/text.hpp"

namespace bildos {

void validate(const SessionConfig& cfg, const Translator& translator) {
  if (cfg.num_of_turns < 1) throw InvalidArgument("num_of_turns must be >= 1");
  if (!translator.has_backend(cfg.backend)) throw InvalidArgument("unknown translator backend: " + cfg.backend);
  if (!is_valid_intent_name(cfg.user_id)) throw InvalidArgument("user id must match [a-z0-9_-]+");
  validate(cfg.eval);
}

std::shared_ptr<Engine> load_engine(const std::filesystem::path& lexicon_file,
                                    const std::filesystem::path& templates_file) {
  auto engine = std::make_shared<Engine>();
  engine->lexicon = std::make_shared<const BilingualLexicon>(BilingualLexicon::load(lexicon_file));
  engine->translator = std::make_shared<Translator>(engine->lexicon);
  engine->templates = std::make_shared<const TemplateTable>(TemplateTable::load(templates_file));
  return engine;
}

std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::open: return "open";
    case SessionStatus::concluded: return "concluded";
    case SessionStatus::terminated: return "terminated";
    case SessionStatus::closed: return "closed";
  }
  return "open";
}

namespace {

std::string strip_edge_punctuation(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto is_punct_or_space = [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && !text::is_word_byte(u);
  };
  while (b < e && is_punct_or_space(s[b])) ++b;
  while (e > b && is_punct_or_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string intent_from_answer(std::string_view english) {
  std::string name = text::to_lower(text::squeeze_spaces(strip_edge_punctuation(english)));
  std::replace(name.begin(), name.end(), ' ', '_');
  return name;
}

}  // namespace

Session::Session(SessionConfig config, std::shared_ptr<const Engine> engine, std::shared_ptr<IntentStore> store)
    : config_(std::move(config)),
      engine_(std::move(engine)),
      store_(std::move(store)),
      state_(DialogueState::initial()) {
  validate(config_, *engine_->translator);
}

std::vector<SystemAction> Session::step(std::string_view raw_utterance) {
  if (status_ != SessionStatus::open) throw SessionClosed();

  const std::string raw(raw_utterance);
  const LanguageTag lang = detect_language(raw);
  transcript_.push_back({Speaker::user, raw, lang, ColorRole::neutral, utc_now_iso8601()});
  state_.last_language = lang;

  std::vector<SystemAction> actions;
  if (state_.turn_count >= config_.num_of_turns) {
    state_.terminated = true;
    status_ = SessionStatus::terminated;
    actions.push_back({action::Terminate{"num_of_turns consumed"}, lang});
    record_system(actions);
    return actions;
  }
  ++state_.turn_count;

  std::string english = raw;
  if (lang == LanguageTag::zh) {
    english = engine_->translator->translate_with_fallback({LanguageTag::zh, LanguageTag::en, raw}, config_.backend)
                  .text;
  }

  if (state_.pending_annotation) {
    actions.push_back(handle_annotation_answer(english));
  } else if (text::trim(english).empty()) {
    const std::string slot = state_.last_request ? *state_.last_request
                                                 : state_.first_unfilled().value_or(std::string(kSlotOrder[0]));
    state_.last_request = slot;
    actions.push_back({action::Request{slot}, lang});
  } else {
    DetectOptions opts{config_.strategy, engine_->decline, state_.last_request};
    const Detection det = detect(english, *store_->snapshot(), opts);
    Decision d = next_action(state_, det, {config_.num_of_turns});
    if (d.state.pending_annotation) {
      d.state.pending_annotation->utterance = english;
      d.action.kind = action::AnnotatePrompt{1, english, {}};
    }
    state_ = std::move(d.state);
    actions.push_back(std::move(d.action));
  }

  if (state_.completed) status_ = SessionStatus::concluded;
  record_system(actions);
  return actions;
}

SystemAction Session::handle_annotation_answer(const std::string& english) {
  const LanguageTag lang = state_.last_language;
  PendingAnnotation& pending = *state_.pending_annotation;

  if (is_decline(english, engine_->decline)) {
    // The user does not want to annotate; go back to the order.
    state_.pending_annotation.reset();
    const std::string slot = state_.last_request ? *state_.last_request
                                                 : state_.first_unfilled().value_or(std::string(kSlotOrder[0]));
    state_.last_request = slot;
    return {action::Request{slot}, lang};
  }

  if (pending.question == 1) {
    const std::string intent = intent_from_answer(english);
    if (!is_valid_intent_name(intent)) return {action::AnnotatePrompt{1, pending.utterance, {}}, lang};
    pending.question = 2;
    pending.intent = intent;
    return {action::AnnotatePrompt{2, pending.utterance, intent}, lang};
  }

  const std::string keyword = normalize_keyword(strip_edge_punctuation(english));
  if (keyword.empty() || contains_cjk(keyword) || text::has_control_chars(keyword) ||
      !text::is_valid_utf8(keyword)) {
    return {action::AnnotatePrompt{2, pending.utterance, pending.intent}, lang};
  }
  try {
    DetectOptions opts{config_.strategy, engine_->decline, state_.last_request};
    Decision d = record_annotation(state_, pending.intent, keyword, *store_, opts, {config_.num_of_turns});
    state_ = std::move(d.state);
    return std::move(d.action);
  } catch (const PersistenceFailure&) {
    // Keep the pending annotation so the user can retry.
    return {action::AnnotatePrompt{2, pending.utterance, pending.intent}, lang};
  }
}

std::vector<SystemAction> Session::answer_annotation(std::string_view intent, std::string_view keyword) {
  if (status_ != SessionStatus::open) throw SessionClosed();
  if (!state_.pending_annotation) throw InvalidArgument("no annotation pending");
  std::vector<SystemAction> actions;
  if (state_.pending_annotation->question == 1) {
    auto first = step(intent);
    actions.insert(actions.end(), first.begin(), first.end());
    if (!state_.pending_annotation || state_.pending_annotation->question != 2 || status_ != SessionStatus::open) {
      return actions;
    }
  }
  auto second = step(keyword);
  actions.insert(actions.end(), second.begin(), second.end());
  return actions;
}

ScoreRecord Session::finish(double user_experience) {
  if (status_ == SessionStatus::closed) throw SessionClosed();
  if (status_ == SessionStatus::open) throw SessionStillOpen();
  ScoreRecord record =
      score(config_.eval, state_.turn_count, status_ == SessionStatus::concluded, user_experience, config_.user_id);
  if (!config_.scores_dir.empty()) append_score(record, config_.scores_dir);
  status_ = SessionStatus::closed;
  return record;
}

std::vector<RenderedMessage> Session::render(const std::vector<SystemAction>& actions) const {
  std::vector<RenderedMessage> out;
  out.reserve(actions.size());
  for (const auto& a : actions) {
    out.push_back({bildos::render(a, *engine_->templates, *engine_->lexicon, engine_->nlg), color_role(a), a.language});
  }
  return out;
}

void Session::record_system(const std::vector<SystemAction>& actions) {
  for (const auto& m : render(actions)) {
    transcript_.push_back({Speaker::system, m.text, m.language, m.role, utc_now_iso8601()});
  }
}

}  // namespace bildos
