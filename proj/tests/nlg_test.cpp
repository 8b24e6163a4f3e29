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

#include <regex>

#include "bildos/errors.hpp"
#include "bildos/nlg.hpp"
#include "test_support.hpp"

namespace bildos {
namespace {

const TemplateTable& templates() { return *testing::shipped_engine()->templates; }
const BilingualLexicon& lexicon() { return *testing::shipped_engine()->lexicon; }

std::string say(ActionKind kind, LanguageTag lang, NlgOptions opts = {}) {
  return render(SystemAction{std::move(kind), lang}, templates(), lexicon(), opts);
}

const OrderSummary kOrder{{"bread", "italian"}, {"cheese", "feta cheese"}, {"vegetable", "avocado"},
                          {"sauce", "barbecue"}, {"extra", "Nothing"}};

TEST(Nlg, DialogueLines) {
  EXPECT_EQ(say(action::Greet{"bread"}, LanguageTag::en),
            "Hi, welcome to our Bi-Lingual Ordering System! What can I do for you? Any bread you prefer?");
  EXPECT_EQ(say(action::ConfirmAndRequest{"bread", "italian", "cheese"}, LanguageTag::en),
            "Nice choice, you ordered Italian bread as bread, anything else for cheese?");
  EXPECT_EQ(say(action::ConfirmAndRequest{"cheese", "feta cheese", "vegetable"}, LanguageTag::zh),
            "您刚刚点了羊奶奶酪作为奶酪，还有什么想要的蔬菜吗？");
  const std::string conclude = say(action::Conclude{"extra", "Nothing", kOrder}, LanguageTag::en);
  EXPECT_NE(conclude.find("with extra Nothing"), std::string::npos);
  EXPECT_NE(conclude.find("Fantastic, your order is: one Italian bread sandwich with feta cheese as cheese, avocado as "
                          "vegetable, barbecue sauce as sauce and with extra Nothing! Thanks for visiting!"),
            std::string::npos);
}

TEST(Nlg, DisplayValues) {
  EXPECT_EQ(templates().display_value("bread", "italian"), "Italian bread");
  EXPECT_EQ(templates().display_value("bread", "japanese bread"), "japanese bread");
  EXPECT_EQ(templates().display_value("sauce", "barbecue"), "barbecue sauce");
  EXPECT_EQ(templates().display_value("cheese", "feta cheese"), "feta cheese");
  EXPECT_EQ(templates().display_value("vegetable", "avocado"), "avocado");
  EXPECT_EQ(templates().display_value("sauce", "Nothing"), "Nothing");
}

TEST(Nlg, ChineseFallsBackToEnglishTerm) {
  EXPECT_EQ(say(action::ConfirmAndRequest{"bread", "japanese bread", "cheese"}, LanguageTag::zh),
            "您刚刚点了japanese bread作为面包，还有什么想要的奶酪吗？");
}

TEST(Nlg, AnnotationPromptsAreEnglishByDefault) {
  const std::string zh = say(action::AnnotatePrompt{1, "Japanese bread", {}}, LanguageTag::zh);
  EXPECT_NE(zh.find("Japanese bread"), std::string::npos);
  EXPECT_FALSE(contains_cjk(zh));
  NlgOptions opts;
  opts.zh_annotation_prompts = true;
  EXPECT_TRUE(contains_cjk(say(action::AnnotatePrompt{1, "Japanese bread", {}}, LanguageTag::zh, opts)));
}

TEST(Nlg, FillPlaceholdersIsSinglePass) {
  std::map<std::string, std::string, std::less<>> v{{"a", "{b}"}, {"b", "x"}};
  EXPECT_EQ(fill_placeholders("{a}-{b}-{c}", v), "{b}-x-{c}");
}

TEST(Templates, ParseErrors) {
  EXPECT_THROW(TemplateTable::parse("greet.en = hi\n"), MissingTemplate);
  EXPECT_THROW(TemplateTable::parse("greet.en = {value}\n"), MalformedFile);
  EXPECT_THROW(TemplateTable::parse("greet.fr = x\n"), MalformedFile);
  EXPECT_THROW(TemplateTable::parse("hello there\n"), MalformedFile);
  EXPECT_THROW(TemplateTable::parse("farewell.en = bye\n"), MalformedFile);
  EXPECT_THROW(TemplateTable::load("/nonexistent/templates.txt"), ConfigError);
}

// No rendered message may keep a {placeholder}, for any action, value and language.
TEST(NlgProperty, NoUnresolvedPlaceholders) {
  const MenuCatalog c = load_catalog(testing::intents_dir());
  std::vector<std::string> values{"Nothing", "japanese bread", "中文"};
  for (const auto& [_, e] : c.entries()) values.insert(values.end(), e.keywords.begin(), e.keywords.end());
  const std::regex placeholder(R"(\{[a-z_]+\})");
  std::mt19937 rng(17);
  auto any = [&] { return values[rng() % values.size()]; };
  auto slot = [&] { return std::string(kSlotOrder[rng() % kSlotOrder.size()]); };
  for (int i = 0; i < 500; ++i) {
    OrderSummary order;
    for (std::string_view s : kSlotOrder) order.emplace_back(std::string(s), any());
    const std::vector<ActionKind> actions{action::Greet{slot()},
                                          action::Request{slot()},
                                          action::ConfirmAndRequest{slot(), any(), slot()},
                                          action::AnnotatePrompt{1, any(), {}},
                                          action::AnnotatePrompt{2, any(), slot()},
                                          action::Conclude{slot(), any(), order},
                                          action::Terminate{"num_of_turns consumed"}};
    for (const auto& a : actions) {
      for (LanguageTag lang : {LanguageTag::en, LanguageTag::zh}) {
        const std::string out = say(a, lang);
        EXPECT_FALSE(std::regex_search(out, placeholder)) << out;
        EXPECT_TRUE(text::is_valid_utf8(out));
      }
    }
  }
}

TEST(Actions, ColorRoles) {
  EXPECT_EQ(color_role({action::Greet{"bread"}}), ColorRole::welcome);
  EXPECT_EQ(color_role({action::ConfirmAndRequest{}}), ColorRole::confirm);
  EXPECT_EQ(color_role({action::Conclude{}}), ColorRole::confirm);
  EXPECT_EQ(color_role({action::AnnotatePrompt{}}), ColorRole::warning);
  EXPECT_EQ(color_role({action::Terminate{}}), ColorRole::warning);
  EXPECT_EQ(color_role({action::Request{}}), ColorRole::neutral);
}

}  // namespace
}  // namespace bildos
