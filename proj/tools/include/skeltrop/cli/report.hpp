// Copyright 2026 The skeltrop Authors.
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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace skeltrop::cli {

enum class Status { kPass, kFail, kError };

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGenericity = 3;

struct Finding {
  std::string severity;  // "ok", "note", "warning", "error"
  std::string cell;
  std::string message;
  std::vector<std::pair<std::string, std::string>> values;
};

struct Report {
  std::string command;
  Status status = Status::kPass;
  int exit_code = kExitPass;
  std::vector<Finding> findings;
  std::vector<std::string> notes;

  void fail(int code = kExitFail);
  void error(int code, const std::string& message);

  nlohmann::json to_json() const;
  /// Human-readable lines followed by the JSON block.
  std::string render() const;
};

std::string to_string(Status s);

}  // namespace skeltrop::cli
