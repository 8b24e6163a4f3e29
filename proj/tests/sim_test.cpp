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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include "bildos/errors.hpp"
#include "bildos/sim.hpp"
#include "test_support.hpp"

namespace bildos {
namespace {

namespace fs = std::filesystem;

SimSetup setup() {
  SimSetup s;
  s.engine = testing::shipped_engine();
  s.intents_dir = testing::intents_dir();
  return s;
}

std::string dir_digest(const fs::path& dir) {
  std::string all;
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) files.push_back(f.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += f.filename().string() + "\n" + testing::read_file(f) + "\x1f";
  return all;
}

const char* kGoldenLine =
    R"({"id":"golden","turns":["Hi there!","Italian bread please!","羊奶奶酪。","牛油果。","Barbecue sauce.","No, thanks!"],)"
    R"("expected_order":{"bread":"italian","cheese":"feta cheese","vegetable":"avocado","sauce":"barbecue","extra":"Nothing"}})";

std::string japanese(bool with_answers) {
  return std::string(R"({"id":"jp","turns":["hi","Japanese bread","feta cheese","avocado","ranch","no"],)") +
         R"("expected_order":{"bread":"japanese bread"})" +
         (with_answers ? R"(,"annotations":[["bread","japanese bread"]]})" : "}");
}

TEST(Corpus, Parse) {
  const auto c = parse_corpus(std::string(kGoldenLine) + "\n\n" + R"({"id":"x","turns":["hi"],"expected_order":"incomplete"})");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].turns.size(), 6u);
  EXPECT_EQ(c[0].expected_order->at("extra"), "Nothing");
  EXPECT_FALSE(c[1].expected_order);
}

TEST(Corpus, FormatErrors) {
  EXPECT_THROW(parse_corpus("{"), CorpusFormatError);
  EXPECT_THROW(parse_corpus(R"({"id":"x","turns":[],"expected_order":"incomplete"})"), CorpusFormatError);
  EXPECT_THROW(parse_corpus(R"({"id":"x","turns":["hi"],"expected_order":{"dessert":"cake"}})"), CorpusFormatError);
  EXPECT_THROW(parse_corpus(R"({"id":"x","turns":["hi"]})"), CorpusFormatError);
  EXPECT_THROW(parse_corpus(R"({"id":"x","turns":["hi"],"expected_order":"done"})"), CorpusFormatError);
  EXPECT_THROW(parse_corpus(R"({"id":"x","turns":["hi"],"expected_order":"incomplete","annotations":[["a"]]})"),
               CorpusFormatError);
  try {
    parse_corpus(std::string(kGoldenLine) + "\n[]");
  } catch (const CorpusFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(load_corpus("/nonexistent.jsonl"), CorpusFormatError);
}

TEST(RunCorpus, GoldenPassesUnderBothStrategies) {
  const auto c = parse_corpus(kGoldenLine);
  for (auto s : {MatchStrategy::word, MatchStrategy::phrase}) {
    const auto r = run_corpus(c, s, setup());
    EXPECT_EQ(r.failures, 0u) << to_string(s);
    EXPECT_EQ(r.failure_rate, 0.0);
  }
}

TEST(RunCorpus, UnseenKeywordNeedsAnnotations) {
  const std::string before = dir_digest(testing::intents_dir());
  EXPECT_EQ(run_corpus(parse_corpus(japanese(false)), MatchStrategy::phrase, setup()).failure_rate, 1.0);
  EXPECT_EQ(run_corpus(parse_corpus(japanese(true)), MatchStrategy::phrase, setup()).failure_rate, 0.0);
  EXPECT_EQ(dir_digest(testing::intents_dir()), before);
}

TEST(RunCorpus, WrongValueFails) {
  auto c = parse_corpus(kGoldenLine);
  (*c[0].expected_order)["bread"] = "flatbread";
  EXPECT_EQ(run_corpus(c, MatchStrategy::phrase, setup()).failures, 1u);
}

TEST(RunCorpus, ReportIsSortedAndStable) {
  auto c = parse_corpus(japanese(true) + "\n" + kGoldenLine);
  const auto a = run_corpus(c, MatchStrategy::word, setup());
  EXPECT_EQ(a.results[0].id, "golden");
  EXPECT_EQ(a.results[1].id, "jp");
  EXPECT_EQ(a.results[1].annotation_prompts, 1);
  EXPECT_EQ(a.to_json().dump(), run_corpus(c, MatchStrategy::word, setup()).to_json().dump());
  EXPECT_NE(a.table().find("strategy word: 0 of 2 dialogues failed"), std::string::npos);
}

TEST(LearningCurve, JapaneseBread) {
  const auto d = parse_corpus(japanese(true))[0];
  EXPECT_EQ(run_learning_curve(d, 3, MatchStrategy::phrase, setup()),
            (std::vector<RunOutcome>{RunOutcome::annotated_pass, RunOutcome::clean_pass, RunOutcome::clean_pass}));
}

TEST(LearningCurve, KnownDialogue) {
  const auto d = parse_corpus(kGoldenLine)[0];
  EXPECT_EQ(run_learning_curve(d, 3, MatchStrategy::word, setup()), std::vector<RunOutcome>(3, RunOutcome::clean_pass));
}

TEST(LearningCurve, NoAnswersNoLearning) {
  const auto d = parse_corpus(japanese(false))[0];
  const std::string before = dir_digest(testing::intents_dir());
  EXPECT_EQ(run_learning_curve(d, 3, MatchStrategy::phrase, setup()), std::vector<RunOutcome>(3, RunOutcome::fail));
  EXPECT_EQ(dir_digest(testing::intents_dir()), before);
}

TEST(Drive, DeclinesWhenOutOfAnswers) {
  testing::IntentSandbox box;
  Session s({}, testing::shipped_engine(), box.store());
  const auto dr = drive(s, {"Japanese bread", "Gouda"}, {});
  EXPECT_EQ(dr.annotation_prompts, 2);
  EXPECT_EQ(dr.annotations_used, 0);
  EXPECT_FALSE(s.annotation_pending());
}

TEST(SimBinary, ShippedCorpusReport) {
  auto run = [](const std::string& strategy) {
    const std::string cmd = std::string(BILDOS_SIM_BIN) + " --format json --strategy " + strategy + " --corpus '" +
                            (testing::data_dir() / "corpus" / "stress.jsonl").string() + "'";
    std::string out;
    FILE* p = ::popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    EXPECT_EQ(::pclose(p), 0);
    return nlohmann::json::parse(out);
  };
  const auto word = run("word");
  const auto phrase = run("phrase");
  EXPECT_EQ(word["dialogues"], 50);
  EXPECT_LE(phrase["failures"].get<int>(), word["failures"].get<int>());
}

}  // namespace
}  // namespace bildos
