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

#include "qsc/qsc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qsc/cyclotomic.hpp"
#include "qsc/errors.hpp"
#include "qsc/harness.hpp"
#include "qsc/padic.hpp"

struct qsc_suite {
  qsc::SuiteSpec spec;
};

struct qsc_report {
  qsc::Report report;
};

namespace {

thread_local std::string g_last_error;

qsc_status map_code(qsc::ErrorCode c) {
  using qsc::ErrorCode;
  switch (c) {
    case ErrorCode::kConfig: return QSC_E_CONFIG;
    case ErrorCode::kIo: return QSC_E_IO;
    case ErrorCode::kParse: return QSC_E_PARSE;
    case ErrorCode::kParameterDomain: return QSC_E_DOMAIN;
    case ErrorCode::kGridPole:
    case ErrorCode::kGridExhausted: return QSC_E_GRID;
    case ErrorCode::kDivisionByZeroPoly:
    case ErrorCode::kDivisionByZeroRF:
    case ErrorCode::kPoleAtPoint:
    case ErrorCode::kDenominatorNotCoprime:
    case ErrorCode::kIdenticallyZeroDenominator:
    case ErrorCode::kNotPAdicUnit: return QSC_E_ARITHMETIC;
  }
  return QSC_E_INTERNAL;
}

qsc_status fail(qsc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
qsc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qsc::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(QSC_E_INTERNAL, e.what());
  } catch (...) {
    return fail(QSC_E_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsc::Format to_format(qsc_format f) {
  switch (f) {
    case QSC_FORMAT_JSON: return qsc::Format::kJson;
    case QSC_FORMAT_CSV: return qsc::Format::kCsv;
    case QSC_FORMAT_TEXT: return qsc::Format::kText;
  }
  throw qsc::Error(qsc::ErrorCode::kConfig, "unknown report format");
}

#define QSC_REQUIRE(cond, what) \
  if (!(cond)) return fail(QSC_E_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* qsc_version(void) {
  static const std::string v(qsc::tool_version());
  return v.c_str();
}

const char* qsc_last_error(void) { return g_last_error.c_str(); }

void qsc_string_free(char* s) { std::free(s); }

int qsc_suite_count(void) { return static_cast<int>(qsc::suite_ids().size()); }

const char* qsc_suite_name(int i) {
  const auto& ids = qsc::suite_ids();
  if (i < 0 || i >= static_cast<int>(ids.size())) return nullptr;
  return ids[static_cast<std::size_t>(i)].c_str();
}

qsc_status qsc_suite_new(const char* suite_id, qsc_suite** out) {
  QSC_REQUIRE(suite_id != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto& ids = qsc::suite_ids();
    bool known = false;
    for (const auto& id : ids) known = known || id == suite_id;
    if (!known) return fail(QSC_E_CONFIG, std::string("unknown suite '") + suite_id + "'");
    *out = new qsc_suite{};
    (*out)->spec.suite = suite_id;
    return QSC_OK;
  });
}

void qsc_suite_free(qsc_suite* s) { delete s; }

qsc_status qsc_suite_set_int(qsc_suite* s, const char* key, int64_t value) {
  QSC_REQUIRE(s != nullptr && key != nullptr, "null argument");
  const std::string k = key;
  auto& spec = s->spec;
  if (k == "n-min") {
    spec.n_min = value;
  } else if (k == "n-max") {
    spec.n_max = value;
  } else if (k == "p-max") {
    spec.p_max = value;
  } else if (k == "m-max") {
    spec.m_max = value;
  } else if (k == "t") {
    spec.t = static_cast<int>(value);
  } else if (k == "grid-margin") {
    spec.grid_margin = value;
  } else if (k == "jobs") {
    if (value < 1 || value > 1024) return fail(QSC_E_CONFIG, "jobs must be in 1..1024");
    spec.jobs = static_cast<int>(value);
  } else {
    return fail(QSC_E_INVALID_ARGUMENT, "unknown integer key '" + k + "'");
  }
  return QSC_OK;
}

qsc_status qsc_suite_set_flag(qsc_suite* s, const char* key, int value) {
  QSC_REQUIRE(s != nullptr && key != nullptr, "null argument");
  if (std::strcmp(key, "include-degenerate") != 0) {
    return fail(QSC_E_INVALID_ARGUMENT, std::string("unknown flag '") + key + "'");
  }
  s->spec.include_degenerate = value != 0;
  return QSC_OK;
}

qsc_status qsc_suite_set_string(qsc_suite* s, const char* key, const char* value) {
  QSC_REQUIRE(s != nullptr && key != nullptr && value != nullptr, "null argument");
  if (std::strcmp(key, "inject-fault") != 0) {
    return fail(QSC_E_INVALID_ARGUMENT, std::string("unknown string key '") + key + "'");
  }
  return guarded([&] {
    s->spec.fault = qsc::parse_fault(value);
    return QSC_OK;
  });
}

qsc_status qsc_run(const qsc_suite* s, qsc_report** out) {
  QSC_REQUIRE(s != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new qsc_report{qsc::run_suite(s->spec)};
    return QSC_OK;
  });
}

void qsc_report_free(qsc_report* r) { delete r; }

qsc_status qsc_parse_format(const char* name, qsc_format* out) {
  QSC_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    switch (qsc::parse_format(name)) {
      case qsc::Format::kJson: *out = QSC_FORMAT_JSON; break;
      case qsc::Format::kCsv: *out = QSC_FORMAT_CSV; break;
      case qsc::Format::kText: *out = QSC_FORMAT_TEXT; break;
    }
    return QSC_OK;
  });
}

qsc_status qsc_report_write(const qsc_report* r, const char* path, qsc_format format) {
  QSC_REQUIRE(r != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    qsc::emit_report(r->report, path, to_format(format));
    return QSC_OK;
  });
}

qsc_status qsc_report_render(const qsc_report* r, qsc_format format, char** out) {
  QSC_REQUIRE(r != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = dup_string(qsc::render_report(r->report, to_format(format)));
    return QSC_OK;
  });
}

int qsc_report_exit_code(const qsc_report* r) { return r == nullptr ? 2 : qsc::exit_code(r->report); }

void qsc_report_counts(const qsc_report* r, int64_t* pass, int64_t* fail_count, int64_t* error,
                       int64_t* skipped) {
  if (r == nullptr) return;
  if (pass) *pass = r->report.pass;
  if (fail_count) *fail_count = r->report.fail;
  if (error) *error = r->report.error;
  if (skipped) *skipped = r->report.skipped;
}

qsc_status qsc_cyclotomic_text(int64_t n, char** out) {
  QSC_REQUIRE(out != nullptr, "null argument");
  if (n < 1) return fail(QSC_E_DOMAIN, "n must be >= 1");
  return guarded([&] {
    const auto phi = qsc::cyclotomic_zpoly(static_cast<long>(n));
    std::string text;
    for (const auto& c : phi->coeffs()) {
      if (!text.empty()) text += ' ';
      text += c.get_str();
    }
    *out = dup_string(text);
    return QSC_OK;
  });
}

qsc_status qsc_padic_gamma(uint64_t p, int k, uint64_t r, uint64_t* out) {
  QSC_REQUIRE(out != nullptr, "null argument");
  return guarded([&] {
    const qsc::PadicContext ctx(p, k);
    if (r >= ctx.modulus()) return fail(QSC_E_DOMAIN, "r must be below p^k");
    *out = ctx.gamma_at(r).value();
    return QSC_OK;
  });
}

}  // extern "C"
