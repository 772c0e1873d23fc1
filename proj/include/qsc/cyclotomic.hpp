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

#ifndef QSC_CYCLOTOMIC_HPP_
#define QSC_CYCLOTOMIC_HPP_

#include <memory>

#include "qsc/laurent_poly.hpp"
#include "qsc/rational_func.hpp"
#include "qsc/verdict.hpp"
#include "qsc/zpoly.hpp"

namespace qsc {

// Largest exponent accepted by divides_power and congruent_mod_cyclotomic.
inline constexpr int kMaxCyclotomicPower = 8;

// Phi_n as an integer polynomial, memoized process-wide.  Computed as
// (q^n - 1) / prod_{d | n, d < n} Phi_d.
std::shared_ptr<const ZPoly> cyclotomic_zpoly(long n);
LaurentPoly cyclotomic(long n);

// True iff Phi_n^e divides the polynomial part of f (q^min_exp removed).
bool divides_power(const LaurentPoly& f, long n, int e);
bool divides_power(const ZPoly& f, long n, int e);

// lhs == rhs modulo Phi_n^e: the numerator of the canonical difference is
// divisible by Phi_n^e, and its denominator is prime to Phi_n (otherwise
// DenominatorNotCoprime is thrown).
Verdict congruent_mod_cyclotomic(const RationalFunc& lhs, const RationalFunc& rhs, long n, int e);

}  // namespace qsc

#endif  // QSC_CYCLOTOMIC_HPP_
