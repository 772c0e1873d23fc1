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

/* C interface to the verification engine.  All handles are opaque; every
 * fallible call returns a qsc_status and leaves a message retrievable with
 * qsc_last_error() on the calling thread. */

#ifndef QSC_QSC_H_
#define QSC_QSC_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QSC_API __attribute__((visibility("default")))
#else
#define QSC_API
#endif

typedef enum qsc_status {
  QSC_OK = 0,
  QSC_E_CONFIG = 1,
  QSC_E_IO = 2,
  QSC_E_PARSE = 3,
  QSC_E_DOMAIN = 4,         /* parameter outside the supported domain */
  QSC_E_ARITHMETIC = 5,     /* division by zero, pole, non-unit */
  QSC_E_GRID = 6,           /* evaluation grid exhausted or hit a pole */
  QSC_E_INVALID_ARGUMENT = 7,
  QSC_E_INTERNAL = 8
} qsc_status;

typedef enum qsc_format { QSC_FORMAT_JSON = 0, QSC_FORMAT_CSV = 1, QSC_FORMAT_TEXT = 2 } qsc_format;

typedef struct qsc_suite qsc_suite;
typedef struct qsc_report qsc_report;

QSC_API const char* qsc_version(void);
/* Message for the last failed call on this thread; empty if none. */
QSC_API const char* qsc_last_error(void);
/* Frees strings returned by qsc_report_render and qsc_cyclotomic_text. */
QSC_API void qsc_string_free(char* s);

/* Number of suite ids and the id at index i (static storage). */
QSC_API int qsc_suite_count(void);
QSC_API const char* qsc_suite_name(int i);

QSC_API qsc_status qsc_suite_new(const char* suite_id, qsc_suite** out);
QSC_API void qsc_suite_free(qsc_suite* s);
/* Integer keys: n-min, n-max, p-max, m-max, t, grid-margin, jobs. */
QSC_API qsc_status qsc_suite_set_int(qsc_suite* s, const char* key, int64_t value);
/* Flag keys: include-degenerate. */
QSC_API qsc_status qsc_suite_set_flag(qsc_suite* s, const char* key, int value);
/* String keys: inject-fault (none, theta, gamma-sign). */
QSC_API qsc_status qsc_suite_set_string(qsc_suite* s, const char* key, const char* value);

QSC_API qsc_status qsc_run(const qsc_suite* s, qsc_report** out);
QSC_API void qsc_report_free(qsc_report* r);
QSC_API qsc_status qsc_parse_format(const char* name, qsc_format* out);
QSC_API qsc_status qsc_report_write(const qsc_report* r, const char* path, qsc_format format);
QSC_API qsc_status qsc_report_render(const qsc_report* r, qsc_format format, char** out);
/* 0 when every case passed or was skipped, 1 on any fail, 2 on any error. */
QSC_API int qsc_report_exit_code(const qsc_report* r);
QSC_API void qsc_report_counts(const qsc_report* r, int64_t* pass, int64_t* fail, int64_t* error,
                               int64_t* skipped);

/* Coefficients of the n-th cyclotomic polynomial, lowest degree first,
 * space separated. */
QSC_API qsc_status qsc_cyclotomic_text(int64_t n, char** out);
/* Gamma_p(r) modulo p^k for a prime p >= 5 and 0 <= r < p^k. */
QSC_API qsc_status qsc_padic_gamma(uint64_t p, int k, uint64_t r, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* QSC_QSC_H_ */
