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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qsc/harness.hpp"
#include "test_util.hpp"

using namespace qsc;
using testutil::code_of;

namespace {

SuiteSpec spec_of(std::string suite) {
  SuiteSpec s;
  s.suite = std::move(suite);
  return s;
}

nlohmann::json strip_timing(nlohmann::json j) {
  for (auto& c : j["cases"]) c.erase("ms");
  return j;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("thm-a enumeration with the degenerate case") {
    SuiteSpec s = spec_of("thm-a");
    s.n_max = 13;
    const Report r = run_suite(s);
    REQUIRE(r.cases.size() == 3);
    CHECK(r.cases[0].id == "thm-a:n=1");
    CHECK(r.cases[0].status == Status::kSkipped);
    CHECK_FALSE(r.cases[0].detail.empty());
    CHECK(r.cases[0].witness["lhs_at_q1"] == "26/27");
    CHECK(r.cases[0].witness["rhs_at_q1"] == "2/1");
    CHECK(r.cases[1].id == "thm-a:n=7");
    CHECK(r.cases[2].id == "thm-a:n=13");
    CHECK(r.cases[1].status == Status::kPass);
    CHECK(r.cases[2].status == Status::kPass);
    CHECK(r.pass == 2);
    CHECK(r.skipped == 1);
    CHECK(exit_code(r) == 0);
  }

  TEST_CASE("liu enumerates primes from 5") {
    SuiteSpec s = spec_of("liu");
    s.p_max = 11;
    const Report r = run_suite(s);
    REQUIRE(r.cases.size() == 3);
    CHECK(r.cases[0].id == "liu:p=5");
    CHECK(r.cases[1].id == "liu:p=7");
    CHECK(r.cases[2].id == "liu:p=11");
    CHECK(r.pass == 3);
  }

  TEST_CASE("configuration errors") {
    SuiteSpec s = spec_of("liu");
    s.p_max = 4;
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    s = spec_of("all");
    s.n_min = 2;
    s.n_max = 4;
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    s = spec_of("nope");
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    s = spec_of("thm-b");
    s.grid_margin = -1;
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    s = spec_of("thm-c");
    s.t = 3;
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    s = spec_of("thm-b");
    s.n_min = 9;
    s.n_max = 8;
    CHECK(code_of([&] { enumerate_cases(s); }) == ErrorCode::kConfig);
    CHECK(code_of([] { parse_format("xml"); }) == ErrorCode::kConfig);
    CHECK(code_of([] { parse_fault("everything"); }) == ErrorCode::kConfig);
  }

  TEST_CASE("default thm-c ranges") {
    std::vector<std::string> ids;
    for (const CaseDef& c : enumerate_cases(spec_of("thm-c"))) ids.push_back(c.id);
    CHECK(ids == std::vector<std::string>{"thm-c:t=1,n=2", "thm-c:t=1,n=5", "thm-c:t=1,n=8", "thm-c:t=1,n=11",
                                          "thm-c:t=2,n=4", "thm-c:t=2,n=7", "thm-c:t=2,n=10", "thm-c:t=2,n=13"});
  }

  TEST_CASE("summary counts match the case tally") {
    SuiteSpec s = spec_of("thm-b");
    s.n_max = 11;
    s.fault = Fault::kTheta;
    const Report r = run_suite(s);
    long pass = 0, fail = 0;
    for (const CaseResult& c : r.cases) {
      pass += c.status == Status::kPass;
      fail += c.status == Status::kFail;
      if (c.status == Status::kFail) CHECK_FALSE(c.witness.empty());
    }
    CHECK(r.pass == pass);
    CHECK(r.fail == fail);
    CHECK(fail == 2);
    CHECK(exit_code(r) == 1);
  }

  TEST_CASE("exit code precedence") {
    Report r;
    CHECK(exit_code(r) == 0);
    r.skipped = 3;
    CHECK(exit_code(r) == 0);
    r.fail = 1;
    CHECK(exit_code(r) == 1);
    r.error = 1;
    CHECK(exit_code(r) == 2);
  }

  TEST_CASE("json report schema") {
    SuiteSpec s = spec_of("liu");
    s.p_max = 7;
    const Report r = run_suite(s);
    const nlohmann::json j = nlohmann::json::parse(render_report(r, Format::kJson));
    CHECK(j.size() == 4);
    CHECK(j["version"] == std::string(tool_version()));
    CHECK(j["config"]["suite"] == "liu");
    CHECK(j["config"]["p_max"] == 7);
    CHECK(j["summary"] == nlohmann::json{{"pass", 2}, {"fail", 0}, {"error", 0}, {"skipped", 0}});
    REQUIRE(j["cases"].size() == 2);
    for (const auto& c : j["cases"]) {
      for (const char* key : {"id", "params", "status", "certified", "witness", "ms"}) CHECK(c.contains(key));
      CHECK(c["status"] == "pass");
      CHECK(c["certified"] == true);
    }
    CHECK(j["cases"][0]["params"]["p"] == 5);
    // Serialization is stable: parsing and dumping again gives the same text.
    const std::string text = render_report(r, Format::kJson);
    CHECK(nlohmann::ordered_json::parse(text).dump(2) + "\n" == text);
  }

  TEST_CASE("csv and text reports") {
    SuiteSpec s = spec_of("cor-b");
    s.p_max = 11;
    const Report r = run_suite(s);
    std::istringstream csv(render_report(r, Format::kCsv));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "id,status,certified,ms");
    int rows = 0;
    while (std::getline(csv, line)) {
      CHECK(line.rfind("cor-b:p=", 0) == 0);
      CHECK(line.find(",pass,true,") != std::string::npos);
      ++rows;
    }
    CHECK(rows == 2);
    const std::string text = render_report(r, Format::kText);
    CHECK(text.rfind("qsc verify", 0) == 0);
    const std::string last = "pass=2 fail=0 error=0 skipped=0\n";
    REQUIRE(text.size() >= last.size());
    CHECK(text.substr(text.size() - last.size()) == last);
  }

  TEST_CASE("emit_report writes files and reports io failures") {
    SuiteSpec s = spec_of("harmonic");
    s.p_max = 17;
    const Report r = run_suite(s);
    const auto dir = std::filesystem::temp_directory_path() / "qsc_harness_test";
    std::filesystem::create_directories(dir);
    emit_report(r, (dir / "r.json").string(), Format::kJson);
    CHECK(slurp(dir / "r.json") == render_report(r, Format::kJson));
    emit_report(r, (dir / "r.csv").string(), Format::kCsv);
    CHECK(slurp(dir / "r.csv") == render_report(r, Format::kCsv));
    CHECK(code_of([&] { emit_report(r, (dir / "missing" / "r.json").string(), Format::kJson); }) ==
          ErrorCode::kIo);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("parallel and serial runs agree") {
    SuiteSpec s = spec_of("all");
    s.n_max = 13;
    s.p_max = 13;
    s.m_max = 3;
    const Report serial = run_suite(s);
    s.jobs = 4;
    const Report parallel = run_suite(s);
    CHECK(serial.error == 0);
    CHECK(serial.fail == 0);
    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (std::size_t i = 0; i < serial.cases.size(); ++i) {
      CHECK(serial.cases[i].id == parallel.cases[i].id);
      CHECK(serial.cases[i].status == parallel.cases[i].status);
    }
    nlohmann::json a = strip_timing(report_to_json(serial));
    nlohmann::json b = strip_timing(report_to_json(parallel));
    a["config"].erase("jobs");
    b["config"].erase("jobs");
    CHECK(a == b);
    CHECK(strip_timing(report_to_json(run_suite(s))) == strip_timing(report_to_json(parallel)));
  }

  TEST_CASE("include-degenerate adds thm-c n = 1 and thm-a diagnostics") {
    SuiteSpec s = spec_of("thm-c");
    s.t = 2;
    s.n_max = 4;
    s.include_degenerate = true;
    const Report r = run_suite(s);
    REQUIRE(r.cases.size() == 2);
    CHECK(r.cases[0].id == "thm-c:t=2,n=1");
    CHECK(r.cases[0].status == Status::kPass);
    s = spec_of("thm-a");
    s.n_max = 1;
    s.include_degenerate = true;
    const Report a = run_suite(s);
    REQUIRE(a.cases.size() == 1);
    CHECK(a.cases[0].status == Status::kSkipped);
    CHECK(a.cases[0].witness.contains("diagnostic"));
  }

  TEST_CASE("gamma sign fault flips invariants only") {
    SuiteSpec s = spec_of("invariants");
    s.fault = Fault::kGammaSign;
    const Report bad = run_suite(s);
    CHECK(bad.fail > 0);
    CHECK(exit_code(bad) == 1);
    s.suite = "prop-b";
    s.p_max = 17;
    CHECK(exit_code(run_suite(s)) == 0);
  }
}
