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

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bildos/language.hpp"

namespace bildos {

// (slot, value) in slot order.
using OrderSummary = std::vector<std::pair<std::string, std::string>>;

namespace action {

// Welcome message followed by a request for `next_slot`.
struct Greet {
  std::string next_slot;
};

struct Request {
  std::string slot;
};

struct ConfirmAndRequest {
  std::string filled_slot;
  std::string filled_value;
  std::string next_slot;
};

// question 1 asks for the intent, question 2 for the keyword.
struct AnnotatePrompt {
  int question = 1;
  std::string utterance;
  std::string intent;  // set for question 2
};

// Acknowledges the last fill and reads back the whole order.
struct Conclude {
  std::string filled_slot;
  std::string filled_value;
  OrderSummary summary;
};

struct Terminate {
  std::string reason;
};

}  // namespace action

using ActionKind = std::variant<action::Greet, action::Request, action::ConfirmAndRequest, action::AnnotatePrompt,
                                action::Conclude, action::Terminate>;

struct SystemAction {
  ActionKind kind;
  LanguageTag language = LanguageTag::en;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(kind);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(kind);
  }
};

// Template key stem: greet, request, confirm, annotate1, annotate2,
// conclude, terminate.
std::string template_key(const SystemAction& a);

enum class ColorRole { welcome, confirm, warning, neutral };

constexpr std::string_view to_string(ColorRole r) {
  switch (r) {
    case ColorRole::welcome: return "welcome";
    case ColorRole::confirm: return "confirm";
    case ColorRole::warning: return "warning";
    case ColorRole::neutral: return "neutral";
  }
  return "neutral";
}

ColorRole color_role(const SystemAction& a);

}  // namespace bildos
