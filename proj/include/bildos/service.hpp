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

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bildos/session.hpp"

namespace httplib {
class Server;
}

namespace bildos {

struct ServiceOptions {
  SessionConfig defaults{};
  std::chrono::steady_clock::duration idle_timeout = std::chrono::minutes(30);
  std::function<std::chrono::steady_clock::time_point()> clock = [] { return std::chrono::steady_clock::now(); };
};

// HTTP/JSON front end. Sessions live in memory and are evicted after
// `idle_timeout` without requests. Requests for one session are serialized;
// different sessions proceed concurrently. Endpoints and bodies are listed in
// docs/api.md.
class Service {
 public:
  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  Service(std::shared_ptr<const Engine> engine, std::shared_ptr<IntentStore> store, ServiceOptions options = {});

  Response handle(std::string_view method, std::string_view path, std::string_view body);

  // Routes every request on `server` through handle().
  void mount(httplib::Server& server);

  std::size_t evict_idle();
  std::size_t session_count() const;

 private:
  struct Entry {
    std::mutex mu;
    std::string id;
    std::string created_at;
    std::unique_ptr<Session> session;
    std::chrono::steady_clock::time_point last_active;
  };

  Response create_session(const nlohmann::json& body);
  Response list_backends() const;
  Response session_request(std::string_view method, const std::string& id, std::string_view verb,
                           const nlohmann::json& body);
  std::shared_ptr<Entry> find(const std::string& id);
  std::string new_id();

  std::shared_ptr<const Engine> engine_;
  std::shared_ptr<IntentStore> store_;
  ServiceOptions options_;

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>, std::less<>> sessions_;
  std::mt19937_64 rng_;
};

}  // namespace bildos
