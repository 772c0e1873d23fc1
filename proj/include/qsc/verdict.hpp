// Copyright 2026 The qsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSC_VERDICT_HPP_
#define QSC_VERDICT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

namespace qsc {

enum class Status { kPass, kFail, kError, kSkipped };

std::string_view to_string(Status s);

// Outcome of one check.  The witness is free-form JSON: a cofactor degree or
// grid size on pass, the offending point and serialized difference on fail.
struct Verdict {
  Status status = Status::kPass;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
  // The check is a complete proof: an exact computation, or grids that met
  // their degree bounds.
  bool certified = false;

  bool passed() const noexcept { return status == Status::kPass; }

  static Verdict pass(std::string detail, nlohmann::json witness = nlohmann::json::object()) {
    return {Status::kPass, std::move(detail), std::move(witness), false};
  }
  static Verdict fail(std::string detail, nlohmann::json witness = nlohmann::json::object()) {
    return {Status::kFail, std::move(detail), std::move(witness), false};
  }
};

}  // namespace qsc

#endif  // QSC_VERDICT_HPP_
