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

#include "skeltrop/cli/report.hpp"

#include <sstream>

namespace skeltrop::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "error";
}

void Report::fail(int code) {
  if (status == Status::kPass) status = Status::kFail;
  if (exit_code == kExitPass) exit_code = code;
}

void Report::error(int code, const std::string& message) {
  status = Status::kError;
  exit_code = code;
  findings.push_back({"error", "", message, {}});
}

nlohmann::json Report::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : findings) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [k, v] : f.values) values.push_back({k, v});
    fs.push_back({{"severity", f.severity}, {"cell", f.cell}, {"message", f.message}, {"values", values}});
  }
  return {{"command", command},
          {"status", to_string(status)},
          {"exit_code", exit_code},
          {"findings", fs},
          {"notes", notes}};
}

std::string Report::render() const {
  std::ostringstream os;
  os << command << ": " << to_string(status) << '\n';
  for (const auto& f : findings) {
    os << "  [" << f.severity << "]";
    if (!f.cell.empty()) os << ' ' << f.cell;
    if (!f.message.empty()) os << ": " << f.message;
    for (const auto& [k, v] : f.values) os << ' ' << k << '=' << v;
    os << '\n';
  }
  for (const auto& n : notes) os << "  note: " << n << '\n';
  os << to_json().dump(2) << '\n';
  return os.str();
}

}  // namespace skeltrop::cli
