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
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "bildos/translator.hpp"

// HTTP clients for the public translation services. None of this is needed
// for offline use; the lexicon backend covers the default configuration.
namespace bildos {

struct HttpRequest {
  std::string method = "GET";
  std::string base_url;  // scheme://host[:port]
  std::string target;    // path and query, already encoded
  std::multimap<std::string, std::string> headers;
  std::string body;
  std::string content_type;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // nullopt on connection failure or timeout.
  virtual std::optional<HttpResponse> send(const HttpRequest& req, std::chrono::milliseconds timeout) = 0;
};

class HttplibTransport final : public HttpTransport {
 public:
  std::optional<HttpResponse> send(const HttpRequest& req, std::chrono::milliseconds timeout) override;
};

// Request/response shape of one service.
class ServiceAdapter {
 public:
  virtual ~ServiceAdapter() = default;
  virtual std::string name() const = 0;
  virtual HttpRequest build(const TranslationRequest& req) const = 0;
  // nullopt when the body does not have the expected shape.
  virtual std::optional<std::string> parse(const std::string& body) const = 0;
};

std::unique_ptr<ServiceAdapter> make_google_adapter(std::string base_url = "https://translate.googleapis.com");
std::unique_ptr<ServiceAdapter> make_baidu_adapter(std::string app_id, std::string secret,
                                                   std::string base_url = "https://fanyi-api.baidu.com");
std::unique_ptr<ServiceAdapter> make_bing_adapter(std::string key, std::string region = {},
                                                  std::string base_url = "https://api.cognitive.microsofttranslator.com");

struct OnlineBackendOptions {
  std::chrono::milliseconds timeout{5000};
  int retries = 1;
};

class OnlineBackend final : public TranslationBackend {
 public:
  OnlineBackend(std::unique_ptr<ServiceAdapter> adapter, std::shared_ptr<HttpTransport> transport,
                OnlineBackendOptions options = {});
  std::string name() const override { return adapter_->name(); }
  std::string translate(const TranslationRequest& req) override;

 private:
  std::unique_ptr<ServiceAdapter> adapter_;
  std::shared_ptr<HttpTransport> transport_;
  OnlineBackendOptions options_;
};

// Registers "google" unconditionally, "baidu" when BILDOS_BAIDU_APPID and
// BILDOS_BAIDU_KEY are set, and "bing" when BILDOS_BING_KEY is set
// (BILDOS_BING_REGION optional).
void register_online_backends(Translator& translator, std::shared_ptr<HttpTransport> transport = nullptr,
                              OnlineBackendOptions options = {});

std::string percent_encode(std::string_view s);
std::string md5_hex(std::string_view s);

}  // namespace bildos
