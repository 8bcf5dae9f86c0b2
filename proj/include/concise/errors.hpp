// Copyright 2026 The Concise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONCISE_ERRORS_HPP
#define CONCISE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace concise {

// Exit-code contract used by the CLI: 0 success, 1 fatal I/O,
// 2 configuration/usage, 3 insufficient data.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitConfigError = 2,
  kExitInsufficientData = 3,
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a measurement step fails (e.g. an external compressor
// exits nonzero). Per-sample failures are collected by corpus runs and
// never abort them; this escapes only from direct single-sample calls.
class MeasurementError : public std::runtime_error {
 public:
  explicit MeasurementError(const std::string& msg) : std::runtime_error(msg) {}
};

class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Zero variance in a rank vector: correlation has no defined value.
class UndefinedCorrelationError : public std::runtime_error {
 public:
  explicit UndefinedCorrelationError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A language required for weighting has no benchmark factor and the
// fallback policy is Error.
class MissingFactorError : public std::runtime_error {
 public:
  explicit MissingFactorError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace concise

#endif  // CONCISE_ERRORS_HPP
