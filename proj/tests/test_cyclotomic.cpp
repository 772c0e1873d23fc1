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

#include <vector>

#include "qsc/cyclotomic.hpp"
#include "qsc/qhyper.hpp"
#include "test_util.hpp"

using namespace qsc;
using testutil::code_of;
using testutil::lp;
using testutil::rf;

namespace {

int mobius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

long totient(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  return n > 1 ? r - r / n : r;
}

using Coeffs = std::vector<BigInt>;

Coeffs times_qd_minus_1(const Coeffs& a, long d) {
  Coeffs r(a.size() + static_cast<std::size_t>(d), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + static_cast<std::size_t>(d)] += a[i];
    r[i] -= a[i];
  }
  return r;
}

// Exact division by q^d - 1 from the top down.
Coeffs over_qd_minus_1(Coeffs a, long d) {
  const std::size_t ud = static_cast<std::size_t>(d);
  Coeffs q(a.size() - ud, BigInt(0));
  for (std::size_t i = a.size(); i-- > ud;) {
    q[i - ud] = a[i];
    a[i - ud] += a[i];
    a[i] = 0;
  }
  for (const auto& c : a) REQUIRE(c == 0);
  return q;
}

// prod_{d | n} (q^d - 1)^{mu(n/d)}
Coeffs phi_mobius(long n) {
  Coeffs r{BigInt(1)};
  std::vector<long> down;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) r = times_qd_minus_1(r, d);
    if (mu == -1) down.push_back(d);
  }
  for (long d : down) r = over_qd_minus_1(r, d);
  return r;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == lp({{1, 1}, {0, -1}}));
    CHECK(cyclotomic(6) == lp({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(cyclotomic(12) == lp({{4, 1}, {2, -1}, {0, 1}}));
    CHECK(code_of([] { cyclotomic(0); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("agreement with the Mobius product") {
    for (long n = 1; n <= 120; ++n) {
      CAPTURE(n);
      CHECK(cyclotomic_zpoly(n)->coeffs() == phi_mobius(n));
    }
    // First index with a coefficient of absolute value 2.
    const auto& c105 = cyclotomic_zpoly(105)->coeffs();
    bool has_two = false;
    for (const auto& c : c105) has_two = has_two || abs(c) == 2;
    CHECK(has_two);
  }

  TEST_CASE("divisor products and degrees") {
    for (long n = 1; n <= 300; ++n) {
      ZPoly prod = ZPoly::constant(1);
      for (long d = 1; d <= n; ++d) {
        if (n % d == 0) prod = prod * *cyclotomic_zpoly(d);
      }
      CAPTURE(n);
      CHECK(prod == ZPoly::monomial(1, static_cast<std::size_t>(n)) - ZPoly::constant(1));
      CHECK(cyclotomic_zpoly(n)->degree() == totient(n));
    }
  }

  TEST_CASE("divisibility by powers") {
    CHECK(divides_power(lp({{7, 1}, {0, -1}}), 7, 1));
    CHECK_FALSE(divides_power(lp({{1, 1}, {0, -1}}), 7, 1));
    const LaurentPoly phi6 = lp({{2, 1}, {1, -1}, {0, 1}});
    CHECK(divides_power(phi6 * phi6 * phi6 * lp({{1, 1}, {0, 2}}), 6, 3));
    CHECK_FALSE(divides_power(phi6 * phi6 * lp({{1, 1}, {0, 2}}), 6, 3));
    // A power of q in front does not matter.
    CHECK(divides_power(phi6.shifted(-4), 6, 1));
    CHECK(code_of([&] { divides_power(phi6, 6, kMaxCyclotomicPower + 1); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("congruences modulo cyclotomic powers") {
    CHECK(congruent_mod_cyclotomic(RationalFunc::q_power(7), RationalFunc(1), 7, 1).passed());
    const Verdict v = congruent_mod_cyclotomic(RationalFunc::q_power(1), RationalFunc(1), 7, 1);
    CHECK(v.status == Status::kFail);
    CHECK(v.witness.contains("remainder"));
    const Sides s = thm_a_sides(7);
    const Verdict ok = congruent_mod_cyclotomic(s.lhs, s.rhs, 7, 3);
    CHECK(ok.passed());
    CHECK(ok.certified);
    // Modulo the fourth power the same pair is not congruent.
    CHECK(congruent_mod_cyclotomic(s.lhs, s.rhs, 7, 4).status == Status::kFail);
    const RationalFunc pole = rf(lp({{0, 1}}), cyclotomic(7));
    CHECK(code_of([&] { congruent_mod_cyclotomic(pole, RationalFunc(0), 7, 1); }) ==
          ErrorCode::kDenominatorNotCoprime);
  }
}
