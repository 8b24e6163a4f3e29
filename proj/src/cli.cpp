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

#include "bildos/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bildos/errors.hpp"
#include "bildos/text.hpp"

#ifndef BILDOS_DATA_DIR
#define BILDOS_DATA_DIR "data"
#endif

namespace bildos::cli {

int exit_code_for(SessionStatus status) {
  switch (status) {
    case SessionStatus::concluded: return kExitConcluded;
    case SessionStatus::terminated: return kExitTerminated;
    default: return kExitIncomplete;
  }
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return (v && *v) ? std::string(v) : std::move(fallback);
}

Paths default_paths() {
  const std::filesystem::path data(BILDOS_DATA_DIR);
  return {env_or("BILDOS_INTENTS", (data / "IntentDetails").string()),
          env_or("BILDOS_TEMPLATES", (data / "templates.txt").string()),
          env_or("BILDOS_LEXICON", (data / "lexicon.tsv").string())};
}

std::string_view ansi_code(ColorRole role) {
  switch (role) {
    case ColorRole::welcome: return "\033[34m";
    case ColorRole::confirm: return "\033[32m";
    case ColorRole::warning: return "\033[31m";
    case ColorRole::neutral: return "";
  }
  return "";
}

std::string colorize(std::string_view text, ColorRole role, bool enabled) {
  const std::string_view code = ansi_code(role);
  if (!enabled || code.empty()) return std::string(text);
  std::string out(code);
  out += text;
  out += "\033[0m";
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    if (!text::is_valid_utf8(line)) throw ConfigError(path.string() + ": invalid UTF-8");
    lines.push_back(line);
  }
  return lines;
}

std::deque<AnnotationAnswer> read_annotations(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.size() % 2 != 0) throw ConfigError(path.string() + ": expected intent/keyword line pairs");
  std::deque<AnnotationAnswer> answers;
  for (std::size_t i = 0; i < lines.size(); i += 2) answers.emplace_back(lines[i], lines[i + 1]);
  return answers;
}

std::string transcript_line(const TranscriptEntry& e) {
  nlohmann::json j = {{"speaker", e.speaker == Speaker::user ? "user" : "system"},
                      {"language", std::string(to_string(e.language))},
                      {"text", e.text}};
  if (e.speaker == Speaker::system) j["role"] = std::string(to_string(e.role));
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

namespace {

std::optional<double> parse_score(const std::string& s) {
  const std::string t(text::trim(s));
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return std::nullopt;
  return v;
}

void print_record(std::ostream& out, const ScoreRecord& r) {
  out << "Score: " << r.final_score << " (turns " << r.num_of_turns << ", task "
      << (r.task_completed ? "completed" : "failed") << ", experience " << r.user_experience << ", factor "
      << r.effective_factor << ")\n";
}

}  // namespace

int run_repl(Session& session, std::istream& in, std::ostream& out, bool color) {
  std::string line;
  while (session.status() == SessionStatus::open) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return kExitIncomplete;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (const auto& m : session.render(session.step(line))) out << colorize(m.text, m.role, color) << "\n";
  }

  const int code = exit_code_for(session.status());
  for (;;) {
    out << "How was your experience (0-10)? " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return code;
    }
    const auto v = parse_score(line);
    if (!v) {
      out << "Please enter a number between 0 and 10.\n";
      continue;
    }
    try {
      print_record(out, session.finish(*v));
      return code;
    } catch (const OutOfRangeUserScore&) {
      out << "Please enter a number between 0 and 10.\n";
    }
  }
}

ScriptResult run_script(Session& session, const std::vector<std::string>& lines, std::deque<AnnotationAnswer> answers,
                        std::ostream& out, std::optional<double> user_score) {
  drive(session, lines, std::move(answers));
  ScriptResult result;
  result.exit_code = exit_code_for(session.status());
  for (const auto& e : session.transcript()) out << transcript_line(e) << "\n";
  if (user_score && session.status() != SessionStatus::open) {
    result.record = session.finish(*user_score);
    out << nlohmann::json{{"score", to_json(*result.record)}}.dump() << "\n";
  }
  return result;
}

}  // namespace bildos::cli
