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

#include "bildos/actions.hpp"

#include "overloaded.hpp"

namespace bildos {

std::string template_key(const SystemAction& a) {
  return std::visit(detail::overloaded{
                        [](const action::Greet&) { return std::string("greet"); },
                        [](const action::Request&) { return std::string("request"); },
                        [](const action::ConfirmAndRequest&) { return std::string("confirm"); },
                        [](const action::AnnotatePrompt& p) { return "annotate" + std::to_string(p.question); },
                        [](const action::Conclude&) { return std::string("conclude"); },
                        [](const action::Terminate&) { return std::string("terminate"); },
                    },
                    a.kind);
}

ColorRole color_role(const SystemAction& a) {
  return std::visit(detail::overloaded{
                        [](const action::Greet&) { return ColorRole::welcome; },
                        [](const action::Request&) { return ColorRole::neutral; },
                        [](const action::ConfirmAndRequest&) { return ColorRole::confirm; },
                        [](const action::AnnotatePrompt&) { return ColorRole::warning; },
                        [](const action::Conclude&) { return ColorRole::confirm; },
                        [](const action::Terminate&) { return ColorRole::warning; },
                    },
                    a.kind);
}

}  // namespace bildos
