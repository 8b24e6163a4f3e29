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

#include "bildos/online_backends.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <random>

#include <httplib.h>
#include <json.hpp>

#include "bildos/errors.hpp"

namespace bildos {
namespace {

using nlohmann::json;

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

class GoogleAdapter final : public ServiceAdapter {
 public:
  explicit GoogleAdapter(std::string base) : base_(std::move(base)) {}
  std::string name() const override { return "google"; }

  HttpRequest build(const TranslationRequest& req) const override {
    HttpRequest http;
    http.base_url = base_;
    http.target = "/translate_a/single?client=gtx&dt=t&sl=" + code(req.src) + "&tl=" + code(req.dest) +
                  "&q=" + percent_encode(req.text);
    return http;
  }

  // [[["translated","source",...],...],...]
  std::optional<std::string> parse(const std::string& body) const override {
    const json doc = json::parse(body, nullptr, false);
    if (!doc.is_array() || doc.empty() || !doc[0].is_array()) return std::nullopt;
    std::string out;
    for (const auto& seg : doc[0]) {
      if (!seg.is_array() || seg.empty() || !seg[0].is_string()) return std::nullopt;
      out += seg[0].get<std::string>();
    }
    return out;
  }

 private:
  static std::string code(LanguageTag t) { return t == LanguageTag::zh ? "zh-CN" : "en"; }
  std::string base_;
};

class BaiduAdapter final : public ServiceAdapter {
 public:
  BaiduAdapter(std::string app_id, std::string secret, std::string base)
      : app_id_(std::move(app_id)), secret_(std::move(secret)), base_(std::move(base)) {}
  std::string name() const override { return "baidu"; }

  HttpRequest build(const TranslationRequest& req) const override {
    static std::atomic<unsigned> counter{std::random_device{}()};
    const std::string salt = std::to_string(counter.fetch_add(1) % 1000000000u);
    HttpRequest http;
    http.base_url = base_;
    http.target = "/api/trans/vip/translate?q=" + percent_encode(req.text) + "&from=" + code(req.src) +
                  "&to=" + code(req.dest) + "&appid=" + percent_encode(app_id_) + "&salt=" + salt +
                  "&sign=" + md5_hex(app_id_ + req.text + salt + secret_);
    return http;
  }

  // {"trans_result":[{"src":..,"dst":..}]}; lines are joined with '\n'.
  std::optional<std::string> parse(const std::string& body) const override {
    const json doc = json::parse(body, nullptr, false);
    if (!doc.is_object() || !doc.contains("trans_result") || !doc["trans_result"].is_array()) return std::nullopt;
    std::string out;
    for (const auto& item : doc["trans_result"]) {
      if (!item.is_object() || !item.contains("dst") || !item["dst"].is_string()) return std::nullopt;
      if (!out.empty()) out.push_back('\n');
      out += item["dst"].get<std::string>();
    }
    return out;
  }

 private:
  static std::string code(LanguageTag t) { return t == LanguageTag::zh ? "zh" : "en"; }
  std::string app_id_;
  std::string secret_;
  std::string base_;
};

class BingAdapter final : public ServiceAdapter {
 public:
  BingAdapter(std::string key, std::string region, std::string base)
      : key_(std::move(key)), region_(std::move(region)), base_(std::move(base)) {}
  std::string name() const override { return "bing"; }

  HttpRequest build(const TranslationRequest& req) const override {
    HttpRequest http;
    http.method = "POST";
    http.base_url = base_;
    http.target = "/translate?api-version=3.0&from=" + code(req.src) + "&to=" + code(req.dest);
    http.headers.emplace("Ocp-Apim-Subscription-Key", key_);
    if (!region_.empty()) http.headers.emplace("Ocp-Apim-Subscription-Region", region_);
    http.body = json::array({json{{"Text", req.text}}}).dump();
    http.content_type = "application/json";
    return http;
  }

  // [{"translations":[{"text":..,"to":..}]}]
  std::optional<std::string> parse(const std::string& body) const override {
    const json doc = json::parse(body, nullptr, false);
    if (!doc.is_array() || doc.empty()) return std::nullopt;
    const auto& first = doc[0];
    if (!first.is_object() || !first.contains("translations")) return std::nullopt;
    const auto& tr = first["translations"];
    if (!tr.is_array() || tr.empty() || !tr[0].contains("text") || !tr[0]["text"].is_string()) return std::nullopt;
    return tr[0]["text"].get<std::string>();
  }

 private:
  static std::string code(LanguageTag t) { return t == LanguageTag::zh ? "zh-Hans" : "en"; }
  std::string key_;
  std::string region_;
  std::string base_;
};

}  // namespace

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size() * 3);
  for (unsigned char c : s) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
        c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string md5_hex(std::string_view s) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(s.data(), s.size(), digest, &len, EVP_md5(), nullptr) != 1) {
    throw BackendUnavailable("md5 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::optional<HttpResponse> HttplibTransport::send(const HttpRequest& req, std::chrono::milliseconds timeout) {
  httplib::Client client(req.base_url);
  if (!client.is_valid()) return std::nullopt;
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers(req.headers.begin(), req.headers.end());
  httplib::Result res = req.method == "POST"
                            ? client.Post(req.target, headers, req.body, req.content_type)
                            : client.Get(req.target, headers);
  if (!res) return std::nullopt;
  return HttpResponse{res->status, res->body};
}

std::unique_ptr<ServiceAdapter> make_google_adapter(std::string base_url) {
  return std::make_unique<GoogleAdapter>(std::move(base_url));
}

std::unique_ptr<ServiceAdapter> make_baidu_adapter(std::string app_id, std::string secret, std::string base_url) {
  return std::make_unique<BaiduAdapter>(std::move(app_id), std::move(secret), std::move(base_url));
}

std::unique_ptr<ServiceAdapter> make_bing_adapter(std::string key, std::string region, std::string base_url) {
  return std::make_unique<BingAdapter>(std::move(key), std::move(region), std::move(base_url));
}

OnlineBackend::OnlineBackend(std::unique_ptr<ServiceAdapter> adapter, std::shared_ptr<HttpTransport> transport,
                             OnlineBackendOptions options)
    : adapter_(std::move(adapter)), transport_(std::move(transport)), options_(options) {
  if (!transport_) transport_ = std::make_shared<HttplibTransport>();
}

std::string OnlineBackend::translate(const TranslationRequest& req) {
  validate(req);
  const HttpRequest http = adapter_->build(req);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    const auto res = transport_->send(http, options_.timeout);
    if (!res) {
      last_error = "network failure or timeout";
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    if (auto text = adapter_->parse(res->body)) return *text;
    last_error = "unexpected response shape";
  }
  throw BackendUnavailable(adapter_->name() + ": " + last_error);
}

void register_online_backends(Translator& translator, std::shared_ptr<HttpTransport> transport,
                              OnlineBackendOptions options) {
  if (!transport) transport = std::make_shared<HttplibTransport>();
  translator.register_backend(std::make_shared<OnlineBackend>(make_google_adapter(), transport, options));

  const std::string baidu_id = env_or_empty("BILDOS_BAIDU_APPID");
  const std::string baidu_key = env_or_empty("BILDOS_BAIDU_KEY");
  if (!baidu_id.empty() && !baidu_key.empty()) {
    translator.register_backend(
        std::make_shared<OnlineBackend>(make_baidu_adapter(baidu_id, baidu_key), transport, options));
  }
  const std::string bing_key = env_or_empty("BILDOS_BING_KEY");
  if (!bing_key.empty()) {
    translator.register_backend(std::make_shared<OnlineBackend>(
        make_bing_adapter(bing_key, env_or_empty("BILDOS_BING_REGION")), transport, options));
  }
}

}  // namespace bildos
