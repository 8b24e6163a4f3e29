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

#include "bildos/service.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include <httplib.h>

#include "bildos/errors.hpp"

namespace bildos {

using nlohmann::json;

namespace {

Service::Response error(int status, std::string message) { return {status, {{"error", std::move(message)}}}; }

json slots_json(const DialogueState& state) {
  json slots = json::object();
  for (const auto& sv : state.slots) slots[sv.slot] = sv.value ? json(*sv.value) : json(nullptr);
  return slots;
}

json state_json(const Session& s) {
  json j = {{"status", std::string(to_string(s.status()))},
            {"slots", slots_json(s.state())},
            {"completed", s.state().completed},
            {"turn_count", s.state().turn_count},
            {"turns_left", std::max(0, s.config().num_of_turns - s.state().turn_count)},
            {"pending_annotation", s.annotation_pending()}};
  if (const auto& p = s.state().pending_annotation) {
    j["annotation"] = {{"question", p->question}, {"utterance", p->utterance}};
  }
  return j;
}

json config_json(const SessionConfig& c) {
  return {{"turns", c.num_of_turns},
          {"backend", c.backend},
          {"strategy", std::string(to_string(c.strategy))},
          {"user", c.user_id},
          {"task_reward", c.eval.task_reward},
          {"turn_penalty", c.eval.turn_penalty},
          {"score_factor", c.eval.raw_score_factor}};
}

json messages_json(const std::vector<RenderedMessage>& messages) {
  json out = json::array();
  for (const auto& m : messages) {
    out.push_back({{"text", m.text}, {"role", std::string(to_string(m.role))},
                   {"language", std::string(to_string(m.language))}});
  }
  return out;
}

const json& field(const json& body, const char* name) {
  static const json null_value;
  auto it = body.find(name);
  return it == body.end() ? null_value : *it;
}

std::string require_string(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_string()) throw InvalidArgument(std::string("\"") + name + "\" must be a string");
  return v.get<std::string>();
}

double require_number(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_number()) throw InvalidArgument(std::string("\"") + name + "\" must be a number");
  return v.get<double>();
}

SessionConfig apply_overrides(SessionConfig cfg, const json& body) {
  static const std::vector<std::string> known = {"turns",       "backend",      "strategy",    "user",
                                                 "task_reward", "turn_penalty", "score_factor"};
  for (const auto& [k, _] : body.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InvalidArgument("unknown field: " + k);
  }
  if (body.contains("turns")) {
    const json& v = body["turns"];
    if (!v.is_number_integer()) throw InvalidArgument("\"turns\" must be an integer");
    cfg.num_of_turns = v.get<int>();
  }
  if (body.contains("backend")) cfg.backend = require_string(body, "backend");
  if (body.contains("strategy")) {
    const auto s = parse_strategy(require_string(body, "strategy"));
    if (!s) throw InvalidArgument("\"strategy\" must be \"word\" or \"phrase\"");
    cfg.strategy = *s;
  }
  if (body.contains("user")) cfg.user_id = require_string(body, "user");
  if (body.contains("task_reward")) cfg.eval.task_reward = require_number(body, "task_reward");
  if (body.contains("turn_penalty")) cfg.eval.turn_penalty = require_number(body, "turn_penalty");
  if (body.contains("score_factor")) cfg.eval.raw_score_factor = require_number(body, "score_factor");
  return cfg;
}

// Splits "/sessions/<id>/<verb>" (verb may be empty).
bool parse_session_path(std::string_view path, std::string& id, std::string_view& verb) {
  constexpr std::string_view prefix = "/sessions/";
  if (path.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = path.substr(prefix.size());
  const std::size_t slash = rest.find('/');
  id = std::string(rest.substr(0, slash));
  verb = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
  return !id.empty() && verb.find('/') == std::string_view::npos;
}

}  // namespace

Service::Service(std::shared_ptr<const Engine> engine, std::shared_ptr<IntentStore> store, ServiceOptions options)
    : engine_(std::move(engine)), store_(std::move(store)), options_(std::move(options)), rng_(std::random_device{}()) {
  validate(options_.defaults, *engine_->translator);
}

Service::Response Service::handle(std::string_view method, std::string_view path, std::string_view body_text) {
  evict_idle();

  json body = json::object();
  if (!body_text.empty()) {
    body = json::parse(body_text, nullptr, false);
    if (body.is_discarded() || !body.is_object()) return error(400, "request body must be a JSON object");
  }

  try {
    if (path == "/sessions") {
      if (method != "POST") return error(405, "method not allowed");
      return create_session(body);
    }
    if (path == "/backends") {
      if (method != "GET") return error(405, "method not allowed");
      return list_backends();
    }
    std::string id;
    std::string_view verb;
    if (!parse_session_path(path, id, verb)) return error(404, "not found");
    return session_request(method, id, verb, body);
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  } catch (const OutOfRangeUserScore& e) {
    return error(400, e.what());
  } catch (const std::exception&) {
    // Messages of other errors may carry file paths.
    return error(500, "internal error");
  }
}

Service::Response Service::create_session(const json& body) {
  SessionConfig cfg = apply_overrides(options_.defaults, body);
  cfg.scores_dir = options_.defaults.scores_dir;
  auto entry = std::make_shared<Entry>();
  entry->session = std::make_unique<Session>(cfg, engine_, store_);
  entry->created_at = utc_now_iso8601();
  entry->last_active = options_.clock();
  {
    std::lock_guard lock(mu_);
    entry->id = new_id();
    sessions_.emplace(entry->id, entry);
  }
  json out = {{"id", entry->id}, {"created_at", entry->created_at}, {"config", config_json(cfg)}};
  out.update(state_json(*entry->session));
  return {201, out};
}

Service::Response Service::list_backends() const {
  json names = json::array();
  for (const auto& n : engine_->translator->list_backends()) names.push_back(n);
  return {200, {{"backends", names}, {"default", options_.defaults.backend}}};
}

Service::Response Service::session_request(std::string_view method, const std::string& id, std::string_view verb,
                                           const json& body) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown session");
  std::lock_guard lock(entry->mu);
  entry->last_active = options_.clock();
  Session& s = *entry->session;

  const bool post = method == "POST";
  const bool get = method == "GET";
  try {
    if (verb == "order" || verb.empty()) {
      if (!get) return error(405, "method not allowed");
      json out = {{"id", entry->id}, {"created_at", entry->created_at}, {"config", config_json(s.config())}};
      out.update(state_json(s));
      return {200, out};
    }
    if (verb == "utterance") {
      if (!post) return error(405, "method not allowed");
      const std::string text = require_string(body, "text");
      const auto actions = s.step(text);
      json out = {{"messages", messages_json(s.render(actions))}};
      out.update(state_json(s));
      return {200, out};
    }
    if (verb == "annotation") {
      if (!post) return error(405, "method not allowed");
      const std::string intent = require_string(body, "intent");
      const std::string keyword = require_string(body, "keyword");
      if (s.status() != SessionStatus::open) return error(409, "session is closed");
      if (!s.annotation_pending()) return error(409, "no annotation pending");
      const auto actions = s.answer_annotation(intent, keyword);
      json out = {{"messages", messages_json(s.render(actions))}};
      out.update(state_json(s));
      return {200, out};
    }
    if (verb == "evaluation") {
      if (!post) return error(405, "method not allowed");
      const double uexp = require_number(body, "user_experience");
      if (s.status() == SessionStatus::open) return error(409, "conversation has not ended yet");
      if (s.status() == SessionStatus::closed) return error(409, "session is closed");
      const ScoreRecord r = s.finish(uexp);
      return {200, to_json(r)};
    }
  } catch (const SessionClosed& e) {
    return error(409, e.what());
  } catch (const SessionStillOpen& e) {
    return error(409, e.what());
  }
  return error(404, "not found");
}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string Service::new_id() {
  for (;;) {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(rng_()));
    if (!sessions_.count(buf)) return buf;
  }
}

std::size_t Service::evict_idle() {
  const auto now = options_.clock();
  std::lock_guard lock(mu_);
  std::size_t evicted = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock entry_lock(it->second->mu, std::try_to_lock);
    if (entry_lock.owns_lock() && now - it->second->last_active >= options_.idle_timeout) {
      entry_lock.unlock();
      it = sessions_.erase(it);
      ++evicted;
    } else {
      ++it;
    }
  }
  return evicted;
}

std::size_t Service::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

void Service::mount(httplib::Server& server) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(-1, ' ', false, json::error_handler_t::replace), "application/json; charset=utf-8");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Get(R"(/.*)", dispatch);
  server.Post(R"(/.*)", dispatch);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace bildos
