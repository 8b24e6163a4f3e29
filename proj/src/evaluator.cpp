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

#include "bildos/evaluator.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "bildos/errors.hpp"
#include "bildos/intent_store.hpp"

namespace bildos {

void validate(const EvalConfig& cfg) {
  if (!std::isfinite(cfg.task_reward) || cfg.task_reward <= 0) throw InvalidArgument("task_reward must be > 0");
  if (!std::isfinite(cfg.turn_penalty) || cfg.turn_penalty > 0) throw InvalidArgument("turn_penalty must be <= 0");
  if (!std::isfinite(cfg.raw_score_factor)) throw InvalidArgument("score_factor must be finite");
}

double smooth_factor(double raw) {
  const double f = raw >= 0 ? 1.0 / (1.0 + std::exp(-raw)) : std::exp(raw) / (1.0 + std::exp(raw));
  constexpr double lo = std::numeric_limits<double>::denorm_min();
  const double hi = std::nextafter(1.0, 0.0);
  return f < lo ? lo : (f > hi ? hi : f);
}

ScoreRecord score(const EvalConfig& cfg, int num_of_turns, bool task_completed, double user_experience,
                  std::string user_id) {
  validate(cfg);
  if (!(user_experience >= 0.0 && user_experience <= 10.0)) throw OutOfRangeUserScore(user_experience);
  if (num_of_turns < 0) throw InvalidArgument("num_of_turns must be non-negative");

  ScoreRecord r;
  r.user_id = std::move(user_id);
  r.num_of_turns = num_of_turns;
  r.task_completed = task_completed;
  r.user_experience = user_experience;
  r.raw_score_factor = cfg.raw_score_factor;
  r.effective_factor = smooth_factor(cfg.raw_score_factor);
  r.turn_score = num_of_turns * cfg.turn_penalty;
  r.task_score = task_completed ? cfg.task_reward : -cfg.task_reward;
  r.final_score =
      user_experience * r.effective_factor + (r.turn_score + r.task_score) * (1.0 - r.effective_factor);
  r.timestamp = utc_now_iso8601();
  return r;
}

nlohmann::json to_json(const ScoreRecord& r) {
  return {
      {"user_id", r.user_id},
      {"num_of_turns", r.num_of_turns},
      {"task_completed", r.task_completed},
      {"user_experience", r.user_experience},
      {"raw_score_factor", r.raw_score_factor},
      {"effective_factor", r.effective_factor},
      {"turn_score", r.turn_score},
      {"task_score", r.task_score},
      {"final_score", r.final_score},
      {"timestamp", r.timestamp},
  };
}

ScoreRecord score_record_from_json(const nlohmann::json& j) {
  ScoreRecord r;
  r.user_id = j.at("user_id").get<std::string>();
  r.num_of_turns = j.at("num_of_turns").get<int>();
  r.task_completed = j.at("task_completed").get<bool>();
  r.user_experience = j.at("user_experience").get<double>();
  r.raw_score_factor = j.at("raw_score_factor").get<double>();
  r.effective_factor = j.at("effective_factor").get<double>();
  r.turn_score = j.at("turn_score").get<double>();
  r.task_score = j.at("task_score").get<double>();
  r.final_score = j.at("final_score").get<double>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

namespace {

std::mutex& file_mutex(const std::filesystem::path& path) {
  static std::mutex registry_mu;
  static std::map<std::string, std::unique_ptr<std::mutex>> locks;
  std::lock_guard lock(registry_mu);
  auto& slot = locks[std::filesystem::absolute(path).lexically_normal().string()];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

}  // namespace

void append_score(const ScoreRecord& record, const std::filesystem::path& dir) {
  if (!is_valid_intent_name(record.user_id)) {
    throw InvalidArgument("user id must match [a-z0-9_-]+: '" + record.user_id + "'");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / (record.user_id + ".jsonl");
  std::lock_guard lock(file_mutex(path));
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw PersistenceFailure("cannot open " + path.string());
  out << to_json(record).dump() << '\n';
  out.flush();
  if (!out) throw PersistenceFailure("write failed: " + path.string());
}

std::vector<ScoreRecord> read_scores(const std::filesystem::path& dir, const std::string& user_id) {
  std::vector<ScoreRecord> out;
  std::ifstream in(dir / (user_id + ".jsonl"), std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(score_record_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

std::string utc_now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

}  // namespace bildos
