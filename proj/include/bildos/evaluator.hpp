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
#include <string>
#include <vector>

#include <json.hpp>

namespace bildos {

struct EvalConfig {
  double task_reward = 20.0;    // > 0
  double turn_penalty = -1.0;   // <= 0
  double raw_score_factor = 0.0;
};

// Throws InvalidArgument when the config breaks its invariants.
void validate(const EvalConfig& cfg);

struct ScoreRecord {
  std::string user_id;
  int num_of_turns = 0;
  bool task_completed = false;
  double user_experience = 0.0;
  double raw_score_factor = 0.0;
  double effective_factor = 0.5;
  double turn_score = 0.0;
  double task_score = 0.0;
  double final_score = 0.0;
  std::string timestamp;  // ISO 8601, UTC
};

// Logistic squash of the raw factor, kept strictly inside (0, 1).
double smooth_factor(double raw);

// final = uexp * f + (turns * turn_penalty +/- task_reward) * (1 - f), where
// f = smooth_factor(raw_score_factor). Throws OutOfRangeUserScore unless
// user_experience lies in [0, 10].
ScoreRecord score(const EvalConfig& cfg, int num_of_turns, bool task_completed, double user_experience,
                  std::string user_id = "anonymous");

nlohmann::json to_json(const ScoreRecord& r);
ScoreRecord score_record_from_json(const nlohmann::json& j);

// Appends one JSON line to `<dir>/<user_id>.jsonl`. Appends for the same
// file are serialized. Throws InvalidArgument for unsafe user ids and
// PersistenceFailure on I/O errors.
void append_score(const ScoreRecord& record, const std::filesystem::path& dir);
std::vector<ScoreRecord> read_scores(const std::filesystem::path& dir, const std::string& user_id);

std::string utc_now_iso8601();

}  // namespace bildos
