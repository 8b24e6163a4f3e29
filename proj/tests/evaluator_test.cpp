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

#include <cmath>

#include "bildos/errors.hpp"
#include "bildos/evaluator.hpp"
#include "test_support.hpp"

namespace bildos {
namespace {

// Hand-written oracle: Sc = uSc*f + (turns*penalty +/- reward)*(1-f), f = 1/(1+e^-raw).
long double oracle(long double reward, long double penalty, long double raw, int turns, bool done, long double uexp) {
  const long double f = 1.0L / (1.0L + std::exp(-raw));
  return uexp * f + (turns * penalty + (done ? reward : -reward)) * (1.0L - f);
}

TEST(Evaluator, Examples) {
  const EvalConfig d;
  const ScoreRecord a = score(d, 6, true, 8);
  EXPECT_EQ(a.turn_score, -6.0);
  EXPECT_EQ(a.task_score, 20.0);
  EXPECT_EQ(a.effective_factor, 0.5);
  EXPECT_EQ(a.final_score, 11.0);
  EXPECT_EQ(score(d, 10, false, 3).final_score, -13.5);

  EvalConfig trust_user;
  trust_user.raw_score_factor = 50;
  EXPECT_NEAR(score(trust_user, 6, true, 8).final_score, 8.0, 1e-9);
}

TEST(Evaluator, MatchesOracle) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> reward(0.1, 100), penalty(-10, 0), raw(-20, 20), uexp(0, 10);
  for (int i = 0; i < 2000; ++i) {
    EvalConfig c{reward(rng), penalty(rng), raw(rng)};
    const int turns = static_cast<int>(rng() % 200);
    const bool done = rng() % 2;
    const double u = uexp(rng);
    const double got = score(c, turns, done, u).final_score;
    const long double want = oracle(c.task_reward, c.turn_penalty, c.raw_score_factor, turns, done, u);
    EXPECT_NEAR(got, static_cast<double>(want), 1e-9 * std::max(1.0L, std::fabs(want)));
  }
}

TEST(Evaluator, Validation) {
  EXPECT_THROW(score({}, 6, true, 10.5), OutOfRangeUserScore);
  EXPECT_THROW(score({}, 6, true, -0.1), OutOfRangeUserScore);
  EXPECT_THROW(score({}, 6, true, std::nan("")), OutOfRangeUserScore);
  EXPECT_NO_THROW(score({}, 6, true, 0));
  EXPECT_NO_THROW(score({}, 6, true, 10));
  EXPECT_THROW(score({0, -1, 0}, 6, true, 5), InvalidArgument);
  EXPECT_THROW(score({20, 1, 0}, 6, true, 5), InvalidArgument);
  EXPECT_THROW(score({20, -1, INFINITY}, 6, true, 5), InvalidArgument);
}

TEST(Evaluator, SmoothFactorStaysInsideOpenInterval) {
  for (double raw : {-1e6, -745.0, -50.0, 0.0, 50.0, 1e6}) {
    const double f = smooth_factor(raw);
    EXPECT_GT(f, 0.0) << raw;
    EXPECT_LT(f, 1.0) << raw;
  }
  EXPECT_EQ(smooth_factor(0), 0.5);
}

TEST(EvaluatorProperty, MonotoneInTurns) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    EvalConfig c{1.0 + rng() % 50, -static_cast<double>(rng() % 5), static_cast<double>(rng() % 21) - 10};
    const bool done = rng() % 2;
    const double u = rng() % 11;
    double prev = score(c, 0, done, u).final_score;
    for (int t = 1; t <= 100; ++t) {
      const double cur = score(c, t, done, u).final_score;
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(EvaluatorProperty, CompletionBonus) {
  std::mt19937 rng(9);
  for (int i = 0; i < 500; ++i) {
    EvalConfig c{1.0 + rng() % 50, -static_cast<double>(rng() % 5), static_cast<double>(rng() % 21) - 10};
    const int turns = rng() % 60;
    const double u = rng() % 11;
    const double diff = score(c, turns, true, u).final_score - score(c, turns, false, u).final_score;
    EXPECT_NEAR(diff, 2 * c.task_reward * (1 - smooth_factor(c.raw_score_factor)), 1e-9);
  }
}

TEST(ScoreFile, AppendsPerUser) {
  ScratchDir d;
  append_score(score({}, 6, true, 8, "alice"), d.path());
  append_score(score({}, 10, false, 3, "alice"), d.path());
  append_score(score({}, 6, true, 5, "bob"), d.path());
  const auto alice = read_scores(d.path(), "alice");
  ASSERT_EQ(alice.size(), 2u);
  EXPECT_EQ(alice[0].final_score, 11.0);
  EXPECT_EQ(alice[1].final_score, -13.5);
  EXPECT_LE(alice[0].timestamp, alice[1].timestamp);
  EXPECT_EQ(read_scores(d.path(), "bob").size(), 1u);
  EXPECT_TRUE(std::filesystem::exists(d.path() / "alice.jsonl"));
  EXPECT_TRUE(std::filesystem::exists(d.path() / "bob.jsonl"));
  EXPECT_THROW(append_score(score({}, 1, true, 1, "../evil"), d.path()), InvalidArgument);
}

TEST(ScoreFile, RoundTripIsBitExact) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> any(-20, 20);
  ScratchDir d;
  std::vector<ScoreRecord> written;
  for (int i = 0; i < 100; ++i) {
    EvalConfig c{std::fabs(any(rng)) + 0.001, -std::fabs(any(rng)), any(rng)};
    written.push_back(score(c, rng() % 40, rng() % 2, std::fabs(any(rng)) / 2, "carol"));
    append_score(written.back(), d.path());
  }
  const auto back = read_scores(d.path(), "carol");
  ASSERT_EQ(back.size(), written.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(std::memcmp(&back[i].final_score, &written[i].final_score, sizeof(double)), 0);
    EXPECT_EQ(back[i].effective_factor, written[i].effective_factor);
    EXPECT_EQ(back[i].timestamp, written[i].timestamp);
  }
}

}  // namespace
}  // namespace bildos
