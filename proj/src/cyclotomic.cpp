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

#include "qsc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

std::shared_mutex g_table_mu;
std::map<long, std::shared_ptr<const ZPoly>> g_table;

void check_power(long n, int e) {
  if (n < 1) throw Error(ErrorCode::kParameterDomain, "cyclotomic index must be >= 1");
  if (e < 1 || e > kMaxCyclotomicPower) {
    throw Error(ErrorCode::kParameterDomain,
                "cyclotomic power must lie in 1.." + std::to_string(kMaxCyclotomicPower));
  }
}

}  // namespace

std::shared_ptr<const ZPoly> cyclotomic_zpoly(long n) {
  if (n < 1) throw Error(ErrorCode::kParameterDomain, "cyclotomic index must be >= 1");
  {
    std::shared_lock lock(g_table_mu);
    auto it = g_table.find(n);
    if (it != g_table.end()) return it->second;
  }
  // Compute outside the lock; a racing thread may duplicate the work.
  ZPoly p = ZPoly::monomial(1, static_cast<std::size_t>(n)) - ZPoly::constant(1);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = *exact_quotient(p, *cyclotomic_zpoly(d));
  }
  auto entry = std::make_shared<const ZPoly>(std::move(p));
  std::unique_lock lock(g_table_mu);
  return g_table.emplace(n, std::move(entry)).first->second;
}

LaurentPoly cyclotomic(long n) { return LaurentPoly::from_zpoly(*cyclotomic_zpoly(n)); }

bool divides_power(const ZPoly& f, long n, int e) {
  check_power(n, e);
  if (f.is_zero()) return true;
  const auto phi = cyclotomic_zpoly(n);
  ZPoly rest = f.shift_down(f.low_order());
  for (int i = 0; i < e; ++i) {
    auto q = exact_quotient(rest, *phi);
    if (!q) return false;
    rest = std::move(*q);
  }
  return true;
}

bool divides_power(const LaurentPoly& f, long n, int e) {
  return divides_power(f.split().poly, n, e);
}

Verdict congruent_mod_cyclotomic(const RationalFunc& lhs, const RationalFunc& rhs, long n, int e) {
  check_power(n, e);
  const RationalFunc d = lhs - rhs;
  nlohmann::json w = {{"n", n}, {"e", e}};
  if (d.is_zero()) {
    w["difference"] = "0";
    Verdict v = Verdict::pass("difference is identically zero", w);
    v.certified = true;
    return v;
  }
  const auto phi = cyclotomic_zpoly(n);
  if (remainder_monic(d.den_poly(), *phi).is_zero()) {
    throw Error(ErrorCode::kDenominatorNotCoprime,
                "denominator of the difference is divisible by Phi_" + std::to_string(n));
  }
  const ZPoly& num = d.num_poly();
  int mult = 0;
  ZPoly rest = num;
  while (mult < e) {
    auto q = exact_quotient(rest, *phi);
    if (!q) break;
    rest = std::move(*q);
    ++mult;
  }
  w["multiplicity"] = mult;
  if (mult == e) {
    w["cofactor_degree"] = rest.degree();
    Verdict v = Verdict::pass("Phi_" + std::to_string(n) + "^" + std::to_string(e) +
                                  " divides the numerator of the difference",
                              w);
    v.certified = true;
    return v;
  }
  const ZPoly modulus = power(*phi, static_cast<unsigned>(e));
  w["remainder"] = nlohmann::json::parse(LaurentPoly::from_zpoly(remainder_monic(num, modulus)).to_text());
  return Verdict::fail("numerator of the difference is divisible only by Phi_" +
                           std::to_string(n) + "^" + std::to_string(mult),
                       w);
}

}  // namespace qsc
