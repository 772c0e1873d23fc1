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

#ifndef QSC_BIGRATIONAL_HPP_
#define QSC_BIGRATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsc {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1),
// which is exactly the invariant the rest of the library relies on.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_text(const BigRational& x);

// Accepts "n/d" or "n"; throws Error(kParse) otherwise or on a zero
// denominator.
BigRational parse_rational(std::string_view text);

// Exact power with integer exponent; a negative exponent inverts (throws
// kDivisionByZeroRF on zero base).
BigRational pow(const BigRational& base, long exponent);

}  // namespace qsc

#endif  // QSC_BIGRATIONAL_HPP_
