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

#ifndef QSC_HARNESS_HPP_
#define QSC_HARNESS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qsc/verdict.hpp"

namespace qsc {

std::string_view tool_version();

// Deliberate corruptions used to show that the checks can fail.
enum class Fault { kNone, kTheta, kGammaSign };
enum class Format { kJson, kCsv, kText };

Fault parse_fault(std::string_view name);    // Config on unknown names
Format parse_format(std::string_view name);  // Config on unknown names
std::string_view to_string(Fault f);
std::string_view to_string(Format f);

struct SuiteSpec {
  std::string suite;
  // Unset values fall back to the per-suite defaults.
  std::optional<long> n_min, n_max, p_max, m_max;
  std::optional<int> t;
  long grid_margin = 0;
  int jobs = 1;
  bool include_degenerate = false;
  Fault fault = Fault::kNone;
};

const std::vector<std::string>& suite_ids();

struct CaseDef {
  std::string id;
  nlohmann::json params;
  std::function<Verdict()> run;
};

// Cases in report order.  Config for unknown suites, malformed ranges and
// ranges that are empty after residue-class filtering.
std::vector<CaseDef> enumerate_cases(const SuiteSpec& spec);

struct CaseResult {
  std::string id;
  nlohmann::json params;
  Status status = Status::kError;
  bool certified = false;
  std::string detail;
  nlohmann::json witness;
  long ms = 0;
};

struct Report {
  std::string version;
  nlohmann::json config;
  std::vector<CaseResult> cases;
  long pass = 0, fail = 0, error = 0, skipped = 0;
};

Report run_suite(const SuiteSpec& spec);
Report run_cases(const SuiteSpec& spec, const std::vector<CaseDef>& cases);

std::string render_report(const Report& report, Format format);
void emit_report(const Report& report, const std::string& path, Format format);  // Io on failure
nlohmann::ordered_json report_to_json(const Report& report);

// 2 when any case errored, else 1 when any case failed, else 0.
int exit_code(const Report& report);

}  // namespace qsc

#endif  // QSC_HARNESS_HPP_
