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

// HTTP service for browser and other clients. See docs/api.md.

#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "bildos/cli.hpp"
#include "bildos/errors.hpp"
#include "bildos/online_backends.hpp"
#include "bildos/service.hpp"

int main(int argc, char** argv) {
  using namespace bildos;
  const cli::Paths defaults = cli::default_paths();

  CLI::App app{"Bilingual ordering dialogue service"};
  std::string listen = cli::env_or("BILDOS_LISTEN", "127.0.0.1:8080");
  std::string backend = cli::env_or("BILDOS_TRANSLATOR", std::string(kLexiconBackend));
  std::string strategy = "phrase";
  int turns = 30;
  std::string intents = defaults.intents.string();
  std::string templates = defaults.templates.string();
  std::string lexicon = defaults.lexicon.string();
  std::string scores = "scores";
  EvalConfig eval;

  app.add_option("--listen", listen, "host:port to bind");
  app.add_option("--backend", backend, "Default translator backend");
  app.add_option("--strategy", strategy, "Default matching strategy")->check(CLI::IsMember({"word", "phrase"}));
  app.add_option("--turns", turns, "Default maximum number of user turns");
  app.add_option("--intents", intents, "Intent directory");
  app.add_option("--templates", templates, "Response template file");
  app.add_option("--lexicon", lexicon, "Chinese-English lexicon file");
  app.add_option("--scores", scores, "Directory for per-user score files");
  app.add_option("--task-reward", eval.task_reward, "Default reward for a completed order");
  app.add_option("--turn-penalty", eval.turn_penalty, "Default score added per user turn");
  app.add_option("--score-factor", eval.raw_score_factor, "Default weight of the user rating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  const std::size_t colon = listen.rfind(':');
  int port = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing port");
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "configuration error: --listen must be host:port\n";
    return cli::kExitConfig;
  }
  const std::string host = listen.substr(0, colon);

  try {
    auto engine = load_engine(lexicon, templates);
    register_online_backends(*engine->translator);
    ServiceOptions options;
    options.defaults.num_of_turns = turns;
    options.defaults.backend = backend;
    options.defaults.strategy = *parse_strategy(strategy);
    options.defaults.eval = eval;
    options.defaults.scores_dir = scores;
    Service service(engine, std::make_shared<IntentStore>(intents), options);

    httplib::Server server;
    service.mount(server);
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
      std::cerr << "cannot bind " << listen << "\n";
      return 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return cli::kExitConfig;
  }
  return 0;
}
