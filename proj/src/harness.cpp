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

#include "qsc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "qsc/cyclotomic.hpp"
#include "qsc/errors.hpp"
#include "qsc/padic.hpp"
#include "qsc/qhyper.hpp"

namespace qsc {

namespace {

constexpr long kThmAMax = 43;
constexpr long kThmBMax = 47;
constexpr long kChainMax = 13;  // thm-c, wei-chain, limits
constexpr long kLemmaMMax = 10;
constexpr long kRelationsMMax = 8;
constexpr long kPMax = 97;
constexpr long kInvariantsPMax = 13;

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::kConfig, what); }

Verdict skipped(std::string reason, nlohmann::json witness) {
  return {Status::kSkipped, std::move(reason), std::move(witness), false};
}

struct Range {
  long lo, hi;
};

Range n_range(const SuiteSpec& s, long default_max) {
  return {s.n_min.value_or(1), s.n_max.value_or(default_max)};
}

std::vector<long> primes(const SuiteSpec& s, long default_max, long residue) {
  std::vector<long> out;
  const long hi = s.p_max.value_or(default_max);
  for (long p = 5; p <= hi; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    if (residue != 0 && p % 6 != residue) continue;
    out.push_back(p);
  }
  return out;
}

Verdict congruence_case(const Sides& s, long n) { return congruent_mod_cyclotomic(s.lhs, s.rhs, n, 3); }

void add_thm_a(const SuiteSpec& s, std::vector<CaseDef>& out) {
  const Range r = n_range(s, kThmAMax);
  const bool diag = s.include_degenerate;
  for (long n = std::max(r.lo, 1L); n <= r.hi; ++n) {
    if (n % 6 != 1) continue;
    if (n == 1) {
      out.push_back({"thm-a:n=1", {{"n", 1}}, [diag] {
                       const Sides sd = thm_a_sides(1, true);
                       nlohmann::json w = {{"lhs_at_q1", to_text(sd.lhs.eval(1))},
                                           {"rhs_at_q1", to_text(sd.rhs.eval(1))}};
                       if (diag) {
                         const Verdict c = congruence_case(sd, 1);
                         w["diagnostic"] = {{"status", to_string(c.status)},
                                            {"detail", c.detail},
                                            {"witness", c.witness},
                                            {"lhs", nlohmann::json::parse(sd.lhs.to_text())},
                                            {"rhs", nlohmann::json::parse(sd.rhs.to_text())}};
                       }
                       return skipped("n = 1 is degenerate: the sides already differ at q = 1", w);
                     }});
      continue;
    }
    out.push_back({"thm-a:n=" + std::to_string(n), {{"n", n}},
                   [n] { return congruence_case(thm_a_sides(n), n); }});
  }
}

void add_thm_b(const SuiteSpec& s, std::vector<CaseDef>& out) {
  const Range r = n_range(s, kThmBMax);
  const bool perturb = s.fault == Fault::kTheta;
  for (long n = std::max(r.lo, 5L); n <= r.hi; ++n) {
    if (n % 6 != 5) continue;
    out.push_back({"thm-b:n=" + std::to_string(n), {{"n", n}},
                   [n, perturb] { return congruence_case(thm_b_sides(n, perturb), n); }});
  }
}

CheckOptions options(const SuiteSpec& s) {
  CheckOptions o;
  o.grid_margin = s.grid_margin;
  o.allow_degenerate = s.include_degenerate;
  return o;
}

void add_thm_c(const SuiteSpec& s, std::vector<CaseDef>& out) {
  const Range r = n_range(s, kChainMax);
  const CheckOptions opt = options(s);
  std::vector<int> ts = s.t ? std::vector<int>{*s.t} : std::vector<int>{1, 2};
  for (int t : ts) {
    for (long n = std::max(r.lo, s.include_degenerate ? 1L : 2L); n <= r.hi; ++n) {
      if (n % 3 != (3 - t) % 3) continue;
      out.push_back({"thm-c:t=" + std::to_string(t) + ",n=" + std::to_string(n),
                     {{"t", t}, {"n", n}},
                     [n, t, opt] { return thm_c_check(n, t, opt); }});
    }
  }
}

void add_lemma(const SuiteSpec& s, std::vector<CaseDef>& out) {
  const CheckOptions opt = options(s);
  for (long m = 0; m <= s.m_max.value_or(kLemmaMMax); ++m) {
    out.push_back({"lemma:m=" + std::to_string(m), {{"m", m}},
                   [m, opt] { return lemma21_check(m, opt); }});
  }
}

void add_identity(const SuiteSpec& s, const std::string& suite, const std::string& name,
                  Identity which, std::vector<CaseDef>& out) {
  const CheckOptions opt = options(s);
  for (long m = 0; m <= s.m_max.value_or(kRelationsMMax); ++m) {
    const std::string id = suite == name ? suite + ":m=" + std::to_string(m)
                                         : suite + ":" + name + ",m=" + std::to_string(m);
    out.push_back({id, {{"identity", name}, {"m", m}},
                   [which, m, opt] { return identity_check(which, m, opt); }});
  }
}

void add_wei(const SuiteSpec& s, bool limits, std::vector<CaseDef>& out) {
  const Range r = n_range(s, kChainMax);
  const CheckOptions opt = options(s);
  const std::string suite = limits ? "limits" : "wei-chain";
  for (WeiVariant v : {WeiVariant::kDD, WeiVariant::kEE}) {
    const long residue = v == WeiVariant::kDD ? 1 : 5;
    // The limit identities are named a and b after the theorems they feed.
    const std::string tag = limits ? (v == WeiVariant::kDD ? "a" : "b") : (v == WeiVariant::kDD ? "dd" : "ee");
    for (long n = std::max(r.lo, 2L); n <= r.hi; ++n) {
      if (n % 6 != residue) continue;
      out.push_back({suite + ":" + tag + ",n=" + std::to_string(n), {{"variant", tag}, {"n", n}},
                     [v, n, opt, limits] {
                       return limits ? lhopital_check(v, n, opt) : wei_chain_check(v, n, opt);
                     }});
    }
  }
}

void add_padic(const SuiteSpec& s, const std::string& suite, std::vector<CaseDef>& out) {
  const bool neg = s.fault == Fault::kGammaSign;
  long residue = 0;
  long pmax = kPMax;
  std::function<Verdict(const PadicContext&)> f;
  if (suite == "long") {
    f = check_long;
  } else if (suite == "liu") {
    f = check_liu;
  } else if (suite == "cor-a" || suite == "cor-b") {
    const Branch b = suite == "cor-a" ? Branch::kA : Branch::kB;
    residue = b == Branch::kA ? 1 : 5;
    f = [b](const PadicContext& c) { return check_cor(b, c); };
  } else if (suite == "prop-a" || suite == "prop-b") {
    const Branch b = suite == "prop-a" ? Branch::kA : Branch::kB;
    residue = b == Branch::kA ? 1 : 5;
    f = [b](const PadicContext& c) { return check_prop(b, c); };
  } else if (suite == "harmonic") {
    residue = 5;
    f = check_harmonic_cong;
  } else {
    pmax = kInvariantsPMax;
    f = check_gamma_invariants;
  }
  for (long p : primes(s, std::min(pmax, s.p_max.value_or(pmax)), residue)) {
    if (suite == "invariants" && p > kInvariantsPMax) continue;
    out.push_back({suite + ":p=" + std::to_string(p), {{"p", p}}, [p, f, neg] {
                     return f(PadicContext(static_cast<std::uint64_t>(p), 3, neg));
                   }});
  }
}

void add_suite(const SuiteSpec& s, const std::string& suite, std::vector<CaseDef>& out) {
  if (suite == "thm-a") {
    add_thm_a(s, out);
  } else if (suite == "thm-b") {
    add_thm_b(s, out);
  } else if (suite == "thm-c") {
    add_thm_c(s, out);
  } else if (suite == "lemma") {
    add_lemma(s, out);
  } else if (suite == "saalschutz") {
    add_identity(s, suite, suite, Identity::kSaalschutz, out);
  } else if (suite == "relations") {
    add_identity(s, suite, "rel4phi3", Identity::kRel4phi3, out);
    add_identity(s, suite, "eq21", Identity::kEq21, out);
    add_identity(s, suite, "rel5phi4", Identity::kRel5phi4, out);
  } else if (suite == "wei-chain") {
    add_wei(s, false, out);
  } else if (suite == "limits") {
    add_wei(s, true, out);
  } else {
    add_padic(s, suite, out);
  }
}

void validate(const SuiteSpec& s) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), s.suite) == ids.end()) config_error("unknown suite '" + s.suite + "'");
  if (s.grid_margin < 0) config_error("grid margin must be >= 0");
  if (s.jobs < 1) config_error("jobs must be >= 1");
  if (s.t && *s.t != 1 && *s.t != 2) config_error("t must be 1 or 2");
  if (s.m_max && *s.m_max < 0) config_error("m-max must be >= 0");
  if (s.n_min && *s.n_min < 1) config_error("n-min must be >= 1");
  if (s.n_min && s.n_max && *s.n_min > *s.n_max) config_error("n-min exceeds n-max");
}

nlohmann::json config_echo(const SuiteSpec& s) {
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  return {{"suite", s.suite},
          {"n_min", opt(s.n_min)},
          {"n_max", opt(s.n_max)},
          {"p_max", opt(s.p_max)},
          {"m_max", opt(s.m_max)},
          {"t", opt(s.t)},
          {"grid_margin", s.grid_margin},
          {"jobs", s.jobs},
          {"include_degenerate", s.include_degenerate},
          {"inject_fault", to_string(s.fault)}};
}

CaseResult run_one(const CaseDef& c) {
  CaseResult r;
  r.id = c.id;
  r.params = c.params;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Verdict v = c.run();
    r.status = v.status;
    r.certified = v.certified;
    r.detail = std::move(v.detail);
    r.witness = std::move(v.witness);
  } catch (const Error& e) {
    r.status = Status::kError;
    r.detail = e.what();
    r.witness = {{"error", to_string(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.status = Status::kError;
    r.detail = e.what();
    r.witness = {{"error", "Internal"}, {"message", e.what()}};
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string_view tool_version() { return "0.1.0"; }

Fault parse_fault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "theta") return Fault::kTheta;
  if (name == "gamma-sign") return Fault::kGammaSign;
  config_error("unknown fault '" + std::string(name) + "' (expected theta or gamma-sign)");
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  config_error("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string_view to_string(Fault f) {
  switch (f) {
    case Fault::kNone: return "none";
    case Fault::kTheta: return "theta";
    case Fault::kGammaSign: return "gamma-sign";
  }
  return "none";
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kText: return "text";
  }
  return "json";
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "thm-a", "thm-b", "thm-c",  "lemma", "saalschutz", "relations", "wei-chain", "limits", "long",
      "liu",   "cor-a", "cor-b", "prop-a", "prop-b",     "harmonic",  "invariants", "all"};
  return ids;
}

std::vector<CaseDef> enumerate_cases(const SuiteSpec& spec) {
  validate(spec);
  std::vector<CaseDef> out;
  if (spec.suite != "all") {
    add_suite(spec, spec.suite, out);
    if (out.empty()) config_error("suite " + spec.suite + " has no cases in the requested range");
    return out;
  }
  for (const auto& id : suite_ids()) {
    if (id == "all") continue;
    const std::size_t before = out.size();
    add_suite(spec, id, out);
    if (out.size() == before) config_error("suite " + id + " has no cases in the requested range");
  }
  return out;
}

Report run_cases(const SuiteSpec& spec, const std::vector<CaseDef>& cases) {
  Report rep;
  rep.version = std::string(tool_version());
  rep.config = config_echo(spec);
  rep.cases.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) rep.cases[i] = run_one(cases[i]);
  };
  const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), cases.size());
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& c : rep.cases) {
    switch (c.status) {
      case Status::kPass: ++rep.pass; break;
      case Status::kFail: ++rep.fail; break;
      case Status::kError: ++rep.error; break;
      case Status::kSkipped: ++rep.skipped; break;
    }
  }
  return rep;
}

Report run_suite(const SuiteSpec& spec) { return run_cases(spec, enumerate_cases(spec)); }

nlohmann::ordered_json report_to_json(const Report& r) {
  using ojson = nlohmann::ordered_json;
  ojson cases = ojson::array();
  for (const auto& c : r.cases) {
    ojson entry;
    entry["id"] = c.id;
    entry["params"] = ojson(c.params);
    entry["status"] = to_string(c.status);
    entry["certified"] = c.certified;
    entry["detail"] = c.detail;
    entry["witness"] = ojson(c.witness);
    entry["ms"] = c.ms;
    cases.push_back(std::move(entry));
  }
  ojson out;
  out["version"] = r.version;
  out["config"] = ojson(r.config);
  out["cases"] = std::move(cases);
  out["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"error", r.error}, {"skipped", r.skipped}};
  return out;
}

std::string render_report(const Report& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson:
      out << report_to_json(r).dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "id,status,certified,ms\n";
      for (const auto& c : r.cases) {
        out << csv_field(c.id) << "," << to_string(c.status) << "," << (c.certified ? "true" : "false")
            << "," << c.ms << "\n";
      }
      break;
    case Format::kText: {
      out << "qsc verify " << r.version << " suite=" << r.config.value("suite", "") << "\n";
      std::size_t width = 0;
      for (const auto& c : r.cases) width = std::max(width, c.id.size());
      for (const auto& c : r.cases) {
        out << c.id << std::string(width + 2 - c.id.size(), ' ') << to_string(c.status)
            << std::string(9 - to_string(c.status).size(), ' ') << (c.certified ? "certified  " : "-          ")
            << c.ms << " ms  " << c.detail << "\n";
        if (c.status == Status::kFail || c.status == Status::kError) {
          out << "    witness: " << c.witness.dump() << "\n";
        }
      }
      out << "pass=" << r.pass << " fail=" << r.fail << " error=" << r.error << " skipped=" << r.skipped << "\n";
      break;
    }
  }
  return out.str();
}

void emit_report(const Report& report, const std::string& path, Format format) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  f << render_report(report, format);
  f.close();
  if (!f) throw Error(ErrorCode::kIo, "failed writing " + path);
}

int exit_code(const Report& report) {
  if (report.error > 0) return 2;
  if (report.fail > 0) return 1;
  return 0;
}

}  // namespace qsc
