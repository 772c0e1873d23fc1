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

// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "qsc/qsc.h"

namespace {

struct Suite {
  qsc_suite* h = nullptr;
  explicit Suite(const char* id) { REQUIRE(qsc_suite_new(id, &h) == QSC_OK); }
  ~Suite() { qsc_suite_free(h); }
};

struct Run {
  qsc_report* h = nullptr;
  qsc_status status;
  explicit Run(const Suite& s) : status(qsc_run(s.h, &h)) {}
  ~Run() { qsc_report_free(h); }
};

std::string take(char* s) {
  std::string out(s);
  qsc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and suite listing") {
  CHECK(std::string(qsc_version()) == "0.1.0");
  REQUIRE(qsc_suite_count() == 17);
  CHECK(std::string(qsc_suite_name(0)) == "thm-a");
  CHECK(std::string(qsc_suite_name(16)) == "all");
  CHECK(qsc_suite_name(17) == nullptr);
}

TEST_CASE("suite handle validation") {
  qsc_suite* s = nullptr;
  CHECK(qsc_suite_new("bogus", &s) == QSC_E_CONFIG);
  CHECK(s == nullptr);
  CHECK(std::string(qsc_last_error()).find("bogus") != std::string::npos);
  CHECK(qsc_suite_new(nullptr, &s) == QSC_E_INVALID_ARGUMENT);
  Suite ok("liu");
  CHECK(qsc_suite_set_int(ok.h, "p-max", 11) == QSC_OK);
  CHECK(qsc_suite_set_int(ok.h, "colour", 1) == QSC_E_INVALID_ARGUMENT);
  CHECK(qsc_suite_set_int(ok.h, "jobs", 0) == QSC_E_CONFIG);
  CHECK(qsc_suite_set_flag(ok.h, "include-degenerate", 1) == QSC_OK);
  CHECK(qsc_suite_set_string(ok.h, "inject-fault", "sideways") == QSC_E_CONFIG);
  qsc_format f;
  CHECK(qsc_parse_format("csv", &f) == QSC_OK);
  CHECK(f == QSC_FORMAT_CSV);
  CHECK(qsc_parse_format("yaml", &f) == QSC_E_CONFIG);
}

TEST_CASE("running a suite") {
  Suite s("liu");
  qsc_suite_set_int(s.h, "p-max", 11);
  Run r(s);
  REQUIRE(r.status == QSC_OK);
  int64_t pass = -1, fail = -1, error = -1, skipped = -1;
  qsc_report_counts(r.h, &pass, &fail, &error, &skipped);
  CHECK(pass == 3);
  CHECK(fail + error + skipped == 0);
  CHECK(qsc_report_exit_code(r.h) == 0);
  char* text = nullptr;
  REQUIRE(qsc_report_render(r.h, QSC_FORMAT_TEXT, &text) == QSC_OK);
  const std::string t = take(text);
  CHECK(t.find("liu:p=11") != std::string::npos);
  CHECK(t.substr(t.size() - 32) == "pass=3 fail=0 error=0 skipped=0\n");
}

TEST_CASE("empty ranges and faults") {
  Suite empty("liu");
  qsc_suite_set_int(empty.h, "p-max", 4);
  Run r(empty);
  CHECK(r.status == QSC_E_CONFIG);
  CHECK(r.h == nullptr);

  Suite bad("thm-b");
  qsc_suite_set_int(bad.h, "n-max", 11);
  REQUIRE(qsc_suite_set_string(bad.h, "inject-fault", "theta") == QSC_OK);
  Run f(bad);
  REQUIRE(f.status == QSC_OK);
  CHECK(qsc_report_exit_code(f.h) == 1);
}

TEST_CASE("writing reports") {
  Suite s("harmonic");
  qsc_suite_set_int(s.h, "p-max", 11);
  Run r(s);
  REQUIRE(r.status == QSC_OK);
  const auto path = std::filesystem::temp_directory_path() / "qsc_capi_report.csv";
  CHECK(qsc_report_write(r.h, path.c_str(), QSC_FORMAT_CSV) == QSC_OK);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
  CHECK(qsc_report_write(r.h, "/nonexistent/dir/r.json", QSC_FORMAT_JSON) == QSC_E_IO);
}

TEST_CASE("math entry points") {
  char* out = nullptr;
  REQUIRE(qsc_cyclotomic_text(6, &out) == QSC_OK);
  CHECK(take(out) == "1 -1 1");
  REQUIRE(qsc_cyclotomic_text(12, &out) == QSC_OK);
  CHECK(take(out) == "1 0 -1 0 1");
  CHECK(qsc_cyclotomic_text(0, &out) == QSC_E_DOMAIN);
  uint64_t g = 0;
  REQUIRE(qsc_padic_gamma(5, 3, 1, &g) == QSC_OK);
  CHECK(g == 124);
  REQUIRE(qsc_padic_gamma(5, 3, 84, &g) == QSC_OK);
  CHECK(qsc_padic_gamma(4, 3, 1, &g) == QSC_E_DOMAIN);
}
