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

#include "bildos/sim.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bildos/errors.hpp"

namespace bildos {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<ScriptedDialogue> parse_corpus(std::string_view jsonl) {
  std::vector<ScriptedDialogue> corpus;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw CorpusFormatError("corpus line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail("not a JSON object");
    ScriptedDialogue d;
    if (!j.contains("id") || !j["id"].is_string()) fail("missing string id");
    d.id = j["id"].get<std::string>();
    if (!j.contains("turns") || !j["turns"].is_array() || j["turns"].empty()) fail("turns must be a non-empty array");
    for (const auto& t : j["turns"]) {
      if (!t.is_string()) fail("turns must be strings");
      d.turns.push_back(t.get<std::string>());
    }
    if (!j.contains("expected_order")) fail("missing expected_order");
    const auto& exp = j["expected_order"];
    if (exp.is_string() && exp.get<std::string>() == "incomplete") {
      d.expected_order = std::nullopt;
    } else if (exp.is_object()) {
      std::map<std::string, std::string> order;
      for (const auto& [k, v] : exp.items()) {
        if (!is_slot(k)) fail("expected_order key is not a slot: " + k);
        if (!v.is_string()) fail("expected_order values must be strings");
        order[k] = v.get<std::string>();
      }
      d.expected_order = std::move(order);
    } else {
      fail("expected_order must be an object or \"incomplete\"");
    }
    if (j.contains("annotations")) {
      if (!j["annotations"].is_array()) fail("annotations must be an array");
      for (const auto& a : j["annotations"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string()) {
          fail("annotation must be [intent, keyword]");
        }
        d.annotations.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
      }
    }
    corpus.push_back(std::move(d));
  }
  return corpus;
}

std::vector<ScriptedDialogue> load_corpus(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusFormatError("cannot open corpus: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

namespace {

bool asks_for_annotation(const std::vector<SystemAction>& actions, int question) {
  return !actions.empty() && actions.back().is<action::AnnotatePrompt>() &&
         actions.back().as<action::AnnotatePrompt>().question == question;
}

}  // namespace

DriveResult drive(Session& session, const std::vector<std::string>& turns, std::deque<AnnotationAnswer> answers) {
  DriveResult result;
  for (const auto& turn : turns) {
    if (session.status() != SessionStatus::open) break;
    auto actions = session.step(turn);
    while (session.status() == SessionStatus::open && asks_for_annotation(actions, 1)) {
      ++result.annotation_prompts;
      if (answers.empty()) {
        actions = session.step("no");
        continue;
      }
      auto [intent, keyword] = answers.front();
      answers.pop_front();
      ++result.annotations_used;
      actions = session.step(intent);
      if (session.status() == SessionStatus::open && asks_for_annotation(actions, 2)) {
        actions = session.step(keyword);
      }
    }
  }
  return result;
}

nlohmann::json CorpusReport::to_json() const {
  json results_json = json::array();
  for (const auto& r : results) {
    json slots = json::object();
    for (const auto& sv : r.slots) slots[sv.slot] = sv.value ? json(*sv.value) : json(nullptr);
    results_json.push_back({{"id", r.id},
                            {"passed", r.passed},
                            {"concluded", r.concluded},
                            {"expected_incomplete", r.expected_incomplete},
                            {"status", std::string(bildos::to_string(r.status))},
                            {"turns", r.turns},
                            {"annotation_prompts", r.annotation_prompts},
                            {"slots", slots}});
  }
  return {{"strategy", std::string(bildos::to_string(strategy))},
          {"dialogues", results.size()},
          {"failures", failures},
          {"failure_rate", failure_rate},
          {"results", results_json}};
}

std::string CorpusReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(28) << "dialogue" << std::setw(8) << "result" << std::setw(12) << "status"
     << std::setw(7) << "turns"
     << "prompts\n";
  for (const auto& r : results) {
    os << std::left << std::setw(28) << r.id << std::setw(8) << (r.passed ? "pass" : "FAIL") << std::setw(12)
       << bildos::to_string(r.status) << std::setw(7) << r.turns << r.annotation_prompts << "\n";
  }
  os << "strategy " << bildos::to_string(strategy) << ": " << failures << " of " << results.size()
     << " dialogues failed (" << std::fixed << std::setprecision(2) << failure_rate * 100.0 << "%)\n";
  return os.str();
}

ScratchDir::ScratchDir(std::string_view tag) {
  static std::atomic<unsigned> counter{0};
  const fs::path base = fs::temp_directory_path();
  for (;;) {
    path_ = base / (std::string(tag) + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::error_code ec;
    if (fs::create_directory(path_, ec)) break;
    if (ec) throw PersistenceFailure("cannot create scratch directory under " + base.string());
  }
}

ScratchDir::~ScratchDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void copy_directory(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  fs::create_directories(to, ec);
  fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::overwrite_existing, ec);
  if (ec) throw PersistenceFailure("cannot copy " + from.string() + ": " + ec.message());
}

namespace {

SessionConfig sim_config(const SimSetup& setup, MatchStrategy strategy) {
  SessionConfig cfg = setup.session;
  cfg.backend = std::string(kLexiconBackend);
  cfg.strategy = strategy;
  cfg.scores_dir.clear();
  return cfg;
}

DialogueResult run_one(const ScriptedDialogue& d, const SessionConfig& cfg, const SimSetup& setup,
                       std::shared_ptr<IntentStore> store) {
  Session session(cfg, setup.engine, std::move(store));
  const DriveResult dr =
      drive(session, d.turns, std::deque<AnnotationAnswer>(d.annotations.begin(), d.annotations.end()));

  DialogueResult r;
  r.id = d.id;
  r.status = session.status();
  r.concluded = session.status() == SessionStatus::concluded;
  r.expected_incomplete = !d.expected_order.has_value();
  r.turns = session.state().turn_count;
  r.annotation_prompts = dr.annotation_prompts;
  r.slots = session.state().slots;
  r.passed = r.concluded;
  if (r.passed && d.expected_order) {
    for (const auto& [slot, want] : *d.expected_order) {
      const auto& got = session.state().value(slot);
      if (!got || *got != want) {
        r.passed = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace

CorpusReport run_corpus(const std::vector<ScriptedDialogue>& corpus, MatchStrategy strategy, const SimSetup& setup) {
  const SessionConfig cfg = sim_config(setup, strategy);
  CorpusReport report;
  report.strategy = strategy;
  for (const auto& d : corpus) {
    ScratchDir sandbox("bildos-sim");
    copy_directory(setup.intents_dir, sandbox.path());
    report.results.push_back(run_one(d, cfg, setup, std::make_shared<IntentStore>(sandbox.path())));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const DialogueResult& a, const DialogueResult& b) { return a.id < b.id; });
  report.failures = static_cast<std::size_t>(
      std::count_if(report.results.begin(), report.results.end(), [](const auto& r) { return !r.passed; }));
  report.failure_rate = corpus.empty() ? 0.0 : static_cast<double>(report.failures) / corpus.size();
  return report;
}

std::string_view to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::clean_pass: return "clean-pass";
    case RunOutcome::annotated_pass: return "annotated";
    case RunOutcome::fail: return "fail";
  }
  return "fail";
}

std::vector<RunOutcome> run_learning_curve(const ScriptedDialogue& dialogue, int repetitions, MatchStrategy strategy,
                                           const SimSetup& setup) {
  const SessionConfig cfg = sim_config(setup, strategy);
  ScratchDir sandbox("bildos-learn");
  copy_directory(setup.intents_dir, sandbox.path());
  std::vector<RunOutcome> outcomes;
  for (int i = 0; i < repetitions; ++i) {
    // Reload from disk each time, as a new process would.
    auto store = std::make_shared<IntentStore>(sandbox.path());
    const DialogueResult r = run_one(dialogue, cfg, setup, std::move(store));
    if (!r.passed) {
      outcomes.push_back(RunOutcome::fail);
    } else {
      outcomes.push_back(r.annotation_prompts > 0 ? RunOutcome::annotated_pass : RunOutcome::clean_pass);
    }
  }
  return outcomes;
}

}  // namespace bildos
