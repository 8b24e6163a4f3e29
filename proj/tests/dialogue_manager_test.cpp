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

#include "bildos/dialogue_manager.hpp"
#include "bildos/errors.hpp"
#include "test_support.hpp"

namespace bildos {
namespace {

MenuCatalog catalog_of(std::initializer_list<std::pair<const char*, std::vector<const char*>>> items) {
  MenuCatalog c;
  for (std::string_view s : kSlotOrder) c.add_keyword(s, "placeholder " + std::string(s));
  for (const auto& [intent, kws] : items) {
    for (const char* kw : kws) c.add_keyword(intent, kw);
  }
  return c;
}

MenuCatalog shipped_catalog() { return load_catalog(testing::intents_dir()); }

DetectOptions with(MatchStrategy s) {
  DetectOptions o;
  o.strategy = s;
  return o;
}

TEST(Detect, Examples) {
  const MenuCatalog c = shipped_catalog();
  const Detection d = detect("italian bread please!", c);
  EXPECT_EQ(d.intent, "bread");
  EXPECT_EQ(d.keyword, "italian");
  EXPECT_FALSE(d.decline);
  EXPECT_FALSE(d.unseen);

  EXPECT_TRUE(detect("No, thanks!", c).decline);
  EXPECT_TRUE(detect("Japanese bread", c).unseen);

  const Detection bbq = detect("barbecue sauce", c);
  EXPECT_EQ(bbq.intent, "sauce");
  EXPECT_EQ(bbq.keyword, "barbecue");
}

TEST(Detect, ChineseIsNotHi) {
  const MenuCatalog c = catalog_of({{"greet", {"hi"}}});
  for (auto s : {MatchStrategy::phrase, MatchStrategy::word}) {
    const Detection d = detect("Chinese", c, with(s));
    EXPECT_TRUE(d.unseen) << to_string(s);
    EXPECT_FALSE(d.intent) << to_string(s);
  }
  EXPECT_EQ(detect("Hi there!", c, with(MatchStrategy::word)).intent, "greet");
}

TEST(Detect, LongestKeywordWins) {
  const MenuCatalog c = catalog_of({{"sauce", {"barbecue", "barbecue sauce"}}, {"sauce", {"honey mustard", "mustard"}}});
  EXPECT_EQ(detect("Barbecue sauce.", c).keyword, "barbecue sauce");
  EXPECT_EQ(detect("honey mustard please", c).keyword, "honey mustard");
}

TEST(Detect, StrategiesOnPunctuatedKeyword) {
  const MenuCatalog c = shipped_catalog();
  // Both strategies find something in the menu spelling.
  const Detection phrase = detect("9-Grain Wheat bread", c, with(MatchStrategy::phrase));
  const Detection word = detect("9-Grain Wheat bread", c, with(MatchStrategy::word));
  EXPECT_EQ(phrase.intent, "bread");
  EXPECT_EQ(phrase.keyword, "9-grain wheat");
  EXPECT_EQ(word.intent, "bread");
  EXPECT_EQ(word.keyword, "wheat");

  // An inserted token breaks the phrase; word matching still only sees "wheat".
  EXPECT_EQ(detect("9-Grain whole Wheat bread", c, with(MatchStrategy::phrase)).keyword, "wheat");
  EXPECT_EQ(detect("9-Grain whole Wheat bread", c, with(MatchStrategy::word)).keyword, "wheat");

  const MenuCatalog oil = catalog_of({{"sauce", {"oil & vinegar"}}});
  EXPECT_EQ(detect("Oil & Vinegar please", oil, with(MatchStrategy::phrase)).keyword, "oil & vinegar");
  EXPECT_TRUE(detect("Oil & Vinegar please", oil, with(MatchStrategy::word)).unseen);
  EXPECT_TRUE(detect("Oil & some Vinegar", oil, with(MatchStrategy::phrase)).unseen);
}

TEST(Detect, PhraseRespectsWordBoundaries) {
  const MenuCatalog c = catalog_of({{"vegetable", {"pickles"}}, {"extra", {"bacon"}}});
  EXPECT_TRUE(detect("picklesque", c).unseen);
  EXPECT_EQ(detect("(bacon)", c).keyword, "bacon");
  EXPECT_EQ(detect("bacon，谢谢", c).keyword, "bacon");
}

TEST(Detect, AmbiguityPrefersLastRequest) {
  const MenuCatalog c = shipped_catalog();  // "monterey cheddar" is listed as bread and as cheese
  DetectOptions o;
  EXPECT_EQ(detect("Monterey Cheddar", c, o).intent, "bread");
  o.last_request = "cheese";
  EXPECT_EQ(detect("Monterey Cheddar", c, o).intent, "cheese");
  o.last_request.reset();
  EXPECT_EQ(detect("monterey cheddar cheese", c, o).intent, "cheese");  // intent named in utterance
}

TEST(Detect, Declines) {
  const DeclineLexicon dl;
  EXPECT_TRUE(is_decline("No, thanks!", dl));
  EXPECT_TRUE(is_decline("nope", dl));
  EXPECT_TRUE(is_decline("Nothing for me", dl));
  EXPECT_FALSE(is_decline("I said no", dl));
  EXPECT_FALSE(is_decline("Nonsense", dl));
}

DialogueState filled(std::initializer_list<std::pair<const char*, const char*>> fills) {
  DialogueState s = DialogueState::initial();
  for (const auto& [slot, v] : fills) s.fill(slot, v);
  return s;
}

Detection hit(const char* intent, const char* kw) {
  Detection d;
  d.intent = intent;
  d.keyword = kw;
  return d;
}

TEST(Policy, Examples) {
  {
    const Decision d = next_action(DialogueState::initial(), hit("greet", "hi"));
    ASSERT_TRUE(d.action.is<action::Greet>());
    EXPECT_EQ(d.action.as<action::Greet>().next_slot, "bread");
    EXPECT_EQ(d.state.last_request, "bread");
  }
  {
    const Decision d = next_action(filled({{"bread", "italian"}}), hit("cheese", "feta"));
    ASSERT_TRUE(d.action.is<action::ConfirmAndRequest>());
    const auto& a = d.action.as<action::ConfirmAndRequest>();
    EXPECT_EQ(a.filled_slot, "cheese");
    EXPECT_EQ(a.filled_value, "feta");
    EXPECT_EQ(a.next_slot, "vegetable");
  }
  {
    DialogueState s = filled({{"bread", "italian"}, {"cheese", "feta"}, {"vegetable", "avocado"}, {"sauce", "barbecue"}});
    s.last_request = "extra";
    Detection decline;
    decline.decline = true;
    const Decision d = next_action(s, decline);
    EXPECT_EQ(d.state.value("extra"), "Nothing");
    ASSERT_TRUE(d.action.is<action::Conclude>());
    EXPECT_TRUE(d.state.completed);
  }
  {
    const Decision d = next_action(DialogueState::initial(), hit("sauce", "barbecue"));
    EXPECT_EQ(d.state.value("sauce"), "barbecue");
    EXPECT_EQ(d.action.as<action::ConfirmAndRequest>().next_slot, "bread");
  }
}

TEST(Policy, Conclude) {
  const DialogueState s =
      filled({{"bread", "italian"}, {"cheese", "feta"}, {"vegetable", "avocado"}, {"sauce", "barbecue"}, {"extra", "Nothing"}});
  EXPECT_EQ(conclude(s), (OrderSummary{{"bread", "italian"}, {"cheese", "feta"}, {"vegetable", "avocado"},
                                      {"sauce", "barbecue"}, {"extra", "Nothing"}}));
  EXPECT_THROW(conclude(filled({{"bread", "italian"}})), NotCompleted);
  const DialogueState nothing =
      filled({{"bread", "Nothing"}, {"cheese", "Nothing"}, {"vegetable", "Nothing"}, {"sauce", "Nothing"}, {"extra", "Nothing"}});
  EXPECT_EQ(conclude(nothing).size(), 5u);
  for (const auto& [slot, v] : conclude(nothing)) EXPECT_EQ(v, "Nothing") << slot;
}

// Reference policy written from the rules, independent of the implementation.
struct Expected {
  std::string kind;
  std::string slot;  // Request/Greet slot, or the filled slot
  std::string next;  // ConfirmAndRequest next slot
  std::array<bool, 5> filled_after{};
};

Expected reference(const std::array<bool, 5>& filled_before, std::optional<int> last_request, int det) {
  // det: 0 decline, 1 unseen, 2 greet, 3 aux, 4..8 slot (det - 4)
  auto first_unfilled = [](const std::array<bool, 5>& f) {
    for (int i = 0; i < 5; ++i) {
      if (!f[i]) return i;
    }
    return -1;
  };
  Expected e;
  e.filled_after = filled_before;
  if (first_unfilled(filled_before) < 0) {
    e.kind = "terminate";
    return e;
  }
  auto fill = [&](int slot) {
    e.filled_after[slot] = true;
    const int next = first_unfilled(e.filled_after);
    e.slot = std::string(kSlotOrder[slot]);
    if (next < 0) {
      e.kind = "conclude";
    } else {
      e.kind = "confirm";
      e.next = std::string(kSlotOrder[next]);
    }
  };
  const std::string first(kSlotOrder[first_unfilled(filled_before)]);
  switch (det) {
    case 0:
      if (last_request) {
        fill(*last_request);
      } else {
        e.kind = "request";
        e.slot = first;
      }
      break;
    case 1: e.kind = "annotate1"; break;
    case 2:
      e.kind = "greet";
      e.slot = first;
      break;
    case 3:
      e.kind = "request";
      e.slot = first;
      break;
    default: fill(det - 4);
  }
  return e;
}

TEST(PolicyProperty, MatchesReferenceOnEveryState) {
  int checked = 0;
  for (int mask = 0; mask < 32; ++mask) {
    for (int lr = -1; lr < 5; ++lr) {
      for (int det = 0; det < 9; ++det) {
        std::array<bool, 5> before{};
        DialogueState s = DialogueState::initial();
        for (int i = 0; i < 5; ++i) {
          before[i] = mask & (1 << i);
          if (before[i]) s.slots[i].value = "v" + std::to_string(i);
        }
        s.completed = s.all_filled();
        std::optional<int> last;
        if (lr >= 0) {
          last = lr;
          s.last_request = std::string(kSlotOrder[lr]);
        }
        Detection d;
        if (det == 0) d.decline = true;
        if (det == 1) d.unseen = true;
        if (det == 2) d = hit("greet", "hi");
        if (det == 3) d = hit("topping", "radish");
        if (det >= 4) d = hit(std::string(kSlotOrder[det - 4]).c_str(), "kw");

        const Expected want = reference(before, last, det);
        const Decision got = next_action(s, d);
        SCOPED_TRACE("mask=" + std::to_string(mask) + " lr=" + std::to_string(lr) + " det=" + std::to_string(det));
        EXPECT_EQ(template_key(got.action), want.kind);
        for (int i = 0; i < 5; ++i) EXPECT_EQ(got.state.slots[i].value.has_value(), want.filled_after[i]);
        if (want.kind == "confirm") {
          const auto& a = got.action.as<action::ConfirmAndRequest>();
          EXPECT_EQ(a.filled_slot, want.slot);
          EXPECT_EQ(a.next_slot, want.next);
          EXPECT_EQ(got.state.last_request, want.next);
          EXPECT_EQ(a.filled_value, det == 0 ? "Nothing" : "kw");
        } else if (want.kind == "request") {
          EXPECT_EQ(got.action.as<action::Request>().slot, want.slot);
          EXPECT_EQ(got.state.last_request, want.slot);
        } else if (want.kind == "greet") {
          EXPECT_EQ(got.action.as<action::Greet>().next_slot, want.slot);
        } else if (want.kind == "conclude") {
          EXPECT_TRUE(got.state.completed);
          EXPECT_EQ(got.action.as<action::Conclude>().summary.size(), 5u);
        } else if (want.kind == "annotate1") {
          EXPECT_TRUE(got.state.pending_annotation);
        }
        EXPECT_EQ(got.state.turn_count, s.turn_count);
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 32 * 6 * 9);
}

TEST(Policy, BudgetSpentTerminates) {
  DialogueState s = DialogueState::initial();
  s.turn_count = 4;
  const Decision d = next_action(s, hit("bread", "italian"), DialoguePolicy{3});
  EXPECT_TRUE(d.action.is<action::Terminate>());
  EXPECT_TRUE(d.state.terminated);
}

class AnnotationTest : public ::testing::Test {
 protected:
  testing::IntentSandbox box;
  IntentStore store{box.path()};

  DialogueState pending(const char* utterance, int question = 1, const char* intent = "") {
    DialogueState s = filled({});
    s.last_request = "bread";
    s.pending_annotation = PendingAnnotation{utterance, question, intent};
    return s;
  }
};

TEST_F(AnnotationTest, FillsSlotAfterLearning) {
  const Decision d = record_annotation(pending("Japanese bread"), "bread", "japanese bread", store, {});
  EXPECT_EQ(d.state.value("bread"), "japanese bread");
  EXPECT_FALSE(d.state.pending_annotation);
  EXPECT_TRUE(d.action.is<action::ConfirmAndRequest>());
  EXPECT_TRUE(store.snapshot()->find("bread")->contains("japanese bread"));
}

TEST_F(AnnotationTest, NewAuxIntentFillsNothing) {
  const DialogueState before = pending("pickled radish on top");
  const Decision d = record_annotation(before, "topping", "pickled radish", store, {});
  ASSERT_NE(store.snapshot()->find("topping"), nullptr);
  EXPECT_EQ(store.snapshot()->find("topping")->keywords, std::vector<std::string>{"pickled radish"});
  for (const auto& sv : d.state.slots) EXPECT_FALSE(sv.value) << sv.slot;
  ASSERT_TRUE(d.action.is<action::Request>());
  EXPECT_EQ(d.action.as<action::Request>().slot, "bread");
  EXPECT_EQ(testing::read_file(box.path() / "topping.txt"), "pickled radish\n");
}

TEST_F(AnnotationTest, EmptyKeywordReissuesPrompt) {
  const DialogueState before = pending("Japanese bread", 2, "bread");
  const std::string file_before = testing::read_file(box.path() / "bread.txt");
  const Decision d = record_annotation(before, "bread", "  ", store, {});
  ASSERT_TRUE(d.action.is<action::AnnotatePrompt>());
  EXPECT_EQ(d.action.as<action::AnnotatePrompt>().question, 2);
  ASSERT_TRUE(d.state.pending_annotation);
  EXPECT_EQ(d.state.pending_annotation->question, 2);
  EXPECT_EQ(d.state.pending_annotation->intent, "bread");
  EXPECT_EQ(d.state.slots[0].value, before.slots[0].value);
  EXPECT_EQ(testing::read_file(box.path() / "bread.txt"), file_before);
}

TEST_F(AnnotationTest, KeywordNotInUtteranceAsksAgain) {
  const Decision d = record_annotation(pending("Japanese bread"), "bread", "rye", store, {});
  EXPECT_TRUE(d.action.is<action::Request>());
  EXPECT_FALSE(d.state.pending_annotation);
}

TEST_F(AnnotationTest, RequiresPending) {
  EXPECT_THROW(record_annotation(DialogueState::initial(), "bread", "rye", store, {}), InvalidArgument);
}

}  // namespace
}  // namespace bildos
