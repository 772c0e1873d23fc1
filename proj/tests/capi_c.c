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

/* The public header must stay valid C. */
#include "qsc/qsc.h"

int main(void) {
  qsc_suite* s = 0;
  if (qsc_suite_new("liu", &s) != QSC_OK) return 1;
  qsc_suite_free(s);
  return qsc_version()[0] == '0' ? 0 : 1;
}
