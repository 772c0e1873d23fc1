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

// verify: command-line front end over the qsc C interface.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qsc/qsc.h"

namespace {

constexpr int kExitError = 2;

int report_error(const std::string& context) {
  std::cerr << "verify: " << context << ": " << qsc_last_error() << "\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> suites;
  for (int i = 0; i < qsc_suite_count(); ++i) suites.emplace_back(qsc_suite_name(i));

  CLI::App app{"Exact verification of q-supercongruences and p-adic supercongruences", "verify"};
  app.set_version_flag("--version", std::string(qsc_version()));

  std::string suite;
  std::optional<int64_t> n_min, n_max, p_max, t, m_max;
  int64_t grid_margin = 0;
  int64_t jobs = 1;
  std::string report_path;
  std::optional<std::string> format;
  bool include_degenerate = false;
  std::string fault = "none";

  app.add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(suites));
  app.add_option("--n-min", n_min, "Smallest n");
  app.add_option("--n-max", n_max, "Largest n");
  app.add_option("--p-max", p_max, "Largest prime");
  app.add_option("--t", t, "Only this t (1 or 2) for thm-c");
  app.add_option("--m-max", m_max, "Largest m for the finite identities");
  app.add_option("--grid-margin", grid_margin, "Extra evaluation points beyond degree bounds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", jobs, "Cases run in parallel")->check(CLI::Range(1, 1024));
  app.add_option("--report", report_path, "Write the report to this file");
  app.add_option("--format", format, "json, csv or text (default json with --report, else text)");
  app.add_flag("--include-degenerate", include_degenerate, "Also run diagnostics for n = 1");
  app.add_option("--inject-fault", fault, "Corrupt a coefficient on purpose: none, theta, gamma-sign");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  qsc_format fmt = report_path.empty() ? QSC_FORMAT_TEXT : QSC_FORMAT_JSON;
  if (format && qsc_parse_format(format->c_str(), &fmt) != QSC_OK) return report_error("--format");

  qsc_suite* spec = nullptr;
  if (qsc_suite_new(suite.c_str(), &spec) != QSC_OK) return report_error("suite");
  const std::pair<const char*, const std::optional<int64_t>*> ints[] = {
      {"n-min", &n_min}, {"n-max", &n_max}, {"p-max", &p_max}, {"t", &t}, {"m-max", &m_max}};
  bool ok = true;
  for (const auto& [key, val] : ints) {
    if (*val && qsc_suite_set_int(spec, key, **val) != QSC_OK) ok = false;
  }
  ok = ok && qsc_suite_set_int(spec, "grid-margin", grid_margin) == QSC_OK;
  ok = ok && qsc_suite_set_int(spec, "jobs", jobs) == QSC_OK;
  ok = ok && qsc_suite_set_flag(spec, "include-degenerate", include_degenerate ? 1 : 0) == QSC_OK;
  ok = ok && qsc_suite_set_string(spec, "inject-fault", fault.c_str()) == QSC_OK;
  if (!ok) {
    qsc_suite_free(spec);
    return report_error("configuration");
  }

  qsc_report* report = nullptr;
  const qsc_status st = qsc_run(spec, &report);
  qsc_suite_free(spec);
  if (st != QSC_OK) return report_error("run");

  int rc = qsc_report_exit_code(report);
  if (report_path.empty()) {
    char* text = nullptr;
    if (qsc_report_render(report, fmt, &text) != QSC_OK) {
      rc = report_error("render");
    } else {
      std::fputs(text, stdout);
      qsc_string_free(text);
    }
  } else {
    if (qsc_report_write(report, report_path.c_str(), fmt) != QSC_OK) {
      rc = report_error("--report");
    } else {
      int64_t pass = 0, fail = 0, error = 0, skipped = 0;
      qsc_report_counts(report, &pass, &fail, &error, &skipped);
      std::cerr << "pass=" << pass << " fail=" << fail << " error=" << error << " skipped=" << skipped
                << "\n";
    }
  }
  qsc_report_free(report);
  return rc;
}
