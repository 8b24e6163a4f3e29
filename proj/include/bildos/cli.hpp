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

#include <deque>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bildos/session.hpp"
#include "bildos/sim.hpp"

namespace bildos::cli {

inline constexpr int kExitConcluded = 0;
inline constexpr int kExitIncomplete = 1;  // script ran out before the dialogue ended
inline constexpr int kExitTerminated = 2;
inline constexpr int kExitConfig = 64;

int exit_code_for(SessionStatus status);

// Default resource locations: environment variable, else the shipped data dir.
struct Paths {
  std::filesystem::path intents;
  std::filesystem::path templates;
  std::filesystem::path lexicon;
};
Paths default_paths();
std::string env_or(const char* name, std::string fallback);

std::string_view ansi_code(ColorRole role);  // empty for neutral
std::string colorize(std::string_view text, ColorRole role, bool enabled);

// UTF-8, one item per line; CR stripped, blank lines skipped.
std::vector<std::string> read_lines(const std::filesystem::path& path);
// Alternating intent / keyword lines. Throws ConfigError on an odd count.
std::deque<AnnotationAnswer> read_annotations(const std::filesystem::path& path);

// Transcript entry as one JSON object without the timestamp, so repeated
// runs print identical bytes.
std::string transcript_line(const TranscriptEntry& e);

int run_repl(Session& session, std::istream& in, std::ostream& out, bool color);

struct ScriptResult {
  int exit_code = kExitIncomplete;
  std::optional<ScoreRecord> record;
};

// Feeds the script through the session, then writes the transcript as JSON
// lines. With a user score and an ended dialogue the session is finished and
// the record is written as a final {"score": ...} line.
ScriptResult run_script(Session& session, const std::vector<std::string>& lines, std::deque<AnnotationAnswer> answers,
                        std::ostream& out, std::optional<double> user_score = std::nullopt);

}  // namespace bildos::cli
