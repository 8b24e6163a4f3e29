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

// Terminal front end: interactive REPL, or a scripted run with --script.

#include <unistd.h>

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bildos/cli.hpp"
#include "bildos/errors.hpp"
#include "bildos/online_backends.hpp"

int main(int argc, char** argv) {
  using namespace bildos;
  const cli::Paths defaults = cli::default_paths();

  CLI::App app{"Bilingual (English/Mandarin) sandwich ordering dialogue"};
  std::string backend = cli::env_or("BILDOS_TRANSLATOR", std::string(kLexiconBackend));
  std::string strategy = "phrase";
  int turns = 30;
  std::string intents = defaults.intents.string();
  std::string templates = defaults.templates.string();
  std::string lexicon = defaults.lexicon.string();
  std::string user = "anonymous";
  std::string scores = "scores";
  EvalConfig eval;
  bool no_color = false;
  std::string script;
  std::string annotations;
  std::optional<double> user_score;

  app.add_option("--backend", backend, "Translator backend (lexicon, google, baidu, bing)");
  app.add_option("--strategy", strategy, "Keyword matching strategy")->check(CLI::IsMember({"word", "phrase"}));
  app.add_option("--turns", turns, "Maximum number of user turns");
  app.add_option("--intents", intents, "Intent directory (one <intent>.txt per intent)");
  app.add_option("--templates", templates, "Response template file");
  app.add_option("--lexicon", lexicon, "Chinese-English lexicon file");
  app.add_option("--user", user, "User id for the score file");
  app.add_option("--scores", scores, "Directory for per-user score files");
  app.add_option("--task-reward", eval.task_reward, "Reward for a completed order");
  app.add_option("--turn-penalty", eval.turn_penalty, "Score added per user turn");
  app.add_option("--score-factor", eval.raw_score_factor, "Weight of the user rating before smoothing");
  app.add_flag("--no-color", no_color, "Disable colored output");
  app.add_option("--script", script, "Run the utterances in this file instead of the REPL");
  app.add_option("--annotations", annotations, "Annotation answers for --script (intent and keyword lines)");
  app.add_option("--user-score", user_score, "Rate a scripted run (0-10) and record the score");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  try {
    auto engine = load_engine(lexicon, templates);
    register_online_backends(*engine->translator);
    auto store = std::make_shared<IntentStore>(intents);

    SessionConfig cfg;
    cfg.num_of_turns = turns;
    cfg.backend = backend;
    cfg.strategy = *parse_strategy(strategy);
    cfg.eval = eval;
    cfg.user_id = user;
    cfg.scores_dir = scores;
    Session session(cfg, engine, store);

    if (script.empty()) {
      if (!annotations.empty() || user_score) {
        std::cerr << "--annotations and --user-score require --script\n";
        return cli::kExitConfig;
      }
      const bool color = !no_color && ::isatty(STDOUT_FILENO);
      return cli::run_repl(session, std::cin, std::cout, color);
    }
    const auto lines = cli::read_lines(script);
    std::deque<AnnotationAnswer> answers;
    if (!annotations.empty()) answers = cli::read_annotations(annotations);
    return cli::run_script(session, lines, std::move(answers), std::cout, user_score).exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
