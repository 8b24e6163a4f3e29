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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bildos {

// Base for every error the engine raises on purpose. Anything else escaping
// a public call is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration problems detected at load time (missing files, bad values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class MissingSlotFile : public ConfigError {
 public:
  explicit MissingSlotFile(std::string slot)
      : ConfigError("missing slot file: " + slot + ".txt"), slot_(std::move(slot)) {}
  const std::string& slot() const { return slot_; }

 private:
  std::string slot_;
};

class MalformedFile : public ConfigError {
 public:
  MalformedFile(std::string path, std::size_t line, const std::string& why)
      : ConfigError(path + ":" + std::to_string(line) + ": " + why),
        path_(std::move(path)),
        line_(line) {}
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

class MissingTemplate : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class PersistenceFailure : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownBackend : public Error {
 public:
  explicit UnknownBackend(const std::string& name) : Error("unknown translator backend: " + name) {}
};

class DuplicateBackend : public Error {
 public:
  explicit DuplicateBackend(const std::string& name)
      : Error("translator backend already registered: " + name) {}
};

class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

class NotCompleted : public Error {
 public:
  NotCompleted() : Error("order is not completed") {}
};

class OutOfRangeUserScore : public Error {
 public:
  explicit OutOfRangeUserScore(double value)
      : Error("user experience score must lie in [0, 10], got " + std::to_string(value)) {}
};

class SessionClosed : public Error {
 public:
  SessionClosed() : Error("session is closed") {}
};

class CorpusFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace bildos
