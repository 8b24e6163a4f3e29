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

// Scripted-user simulator: strategy comparison over a corpus, or a learning
// curve over repeated runs of one dialogue.

#include <iostream>

#include <CLI11.hpp>

#include "bildos/cli.hpp"
#include "bildos/errors.hpp"
#include "bildos/sim.hpp"

int main(int argc, char** argv) {
  using namespace bildos;
  const cli::Paths defaults = cli::default_paths();

  CLI::App app{"Scripted dialogue simulator"};
  std::string corpus_path;
  std::string strategy = "phrase";
  int learning = 0;
  std::string dialogue_id;
  int turns = 30;
  std::string intents = defaults.intents.string();
  std::string templates = defaults.templates.string();
  std::string lexicon = defaults.lexicon.string();
  std::string format = "both";

  app.add_option("--corpus", corpus_path, "JSON-lines corpus of scripted dialogues")->required();
  app.add_option("--strategy", strategy, "Keyword matching strategy")->check(CLI::IsMember({"word", "phrase"}));
  app.add_option("--learning", learning, "Repeat one dialogue n times against a persistent sandbox")
      ->check(CLI::PositiveNumber);
  app.add_option("--dialogue", dialogue_id, "Dialogue id for --learning (default: first in corpus)");
  app.add_option("--turns", turns, "Maximum number of user turns per dialogue");
  app.add_option("--intents", intents, "Intent directory (copied, never modified)");
  app.add_option("--templates", templates, "Response template file");
  app.add_option("--lexicon", lexicon, "Chinese-English lexicon file");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  try {
    const auto corpus = load_corpus(corpus_path);
    SimSetup setup;
    setup.engine = load_engine(lexicon, templates);
    setup.intents_dir = intents;
    setup.session.num_of_turns = turns;
    load_catalog(intents);  // fail early on a bad directory
    const MatchStrategy s = *parse_strategy(strategy);

    if (learning > 0) {
      const ScriptedDialogue* d = corpus.empty() ? nullptr : &corpus.front();
      if (!dialogue_id.empty()) {
        d = nullptr;
        for (const auto& c : corpus) {
          if (c.id == dialogue_id) d = &c;
        }
      }
      if (!d) {
        std::cerr << "no such dialogue in corpus\n";
        return cli::kExitConfig;
      }
      const auto outcomes = run_learning_curve(*d, learning, s, setup);
      nlohmann::json runs = nlohmann::json::array();
      for (auto o : outcomes) runs.push_back(std::string(to_string(o)));
      if (format != "table") {
        std::cout << nlohmann::json{{"dialogue", d->id}, {"strategy", strategy}, {"runs", runs}}.dump() << "\n";
      }
      if (format != "json") {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
          std::cout << "run " << (i + 1) << ": " << to_string(outcomes[i]) << "\n";
        }
      }
      return 0;
    }

    const CorpusReport report = run_corpus(corpus, s, setup);
    if (format != "table") std::cout << report.to_json().dump() << "\n";
    if (format != "json") std::cout << report.table();
    return 0;
  } catch (const CorpusFormatError& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kExitConfig;
  }
}
