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

#ifndef QSC_TESTS_TEST_UTIL_HPP_
#define QSC_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <optional>
#include <utility>

#include "qsc/errors.hpp"
#include "qsc/formula.hpp"
#include "qsc/laurent_poly.hpp"
#include "qsc/rational_func.hpp"

namespace testutil {

using qsc::BigRational;
using qsc::LaurentPoly;
using qsc::RationalFunc;

// Laurent polynomial from (exponent, coefficient) pairs.
inline LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
  std::vector<LaurentPoly::Term> t;
  for (const auto& [e, c] : terms) t.emplace_back(e, BigRational(c));
  return LaurentPoly::from_terms(t);
}

inline RationalFunc rf(const LaurentPoly& num, const LaurentPoly& den) {
  return RationalFunc::normalize(num, den);
}

template <class F>
std::optional<qsc::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const qsc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Value of an expression with every variable bound to a rational.
inline BigRational value(const qsc::Expr& e, std::initializer_list<std::pair<qsc::Var, BigRational>> at) {
  qsc::Binding b;
  for (const auto& [v, x] : at) b.set(v, x, 0);
  return qsc::evaluate(e, b).eval(0);
}

}  // namespace testutil

#endif  // QSC_TESTS_TEST_UTIL_HPP_
