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

#include "qsc/padic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

BigInt to_big(u64 x) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &x);
  return r;
}

u64 from_big(const BigInt& x) {
  u64 r = 0;
  if (sgn(x) != 0) mpz_export(&r, nullptr, 1, sizeof(u64), 0, 0, x.get_mpz_t());
  return r;
}

// Nonnegative representative of x modulo m.
u64 reduce(const BigInt& x, u64 m) {
  BigInt r = x % to_big(m);
  if (sgn(r) < 0) r += to_big(m);
  return from_big(r);
}

std::string branch_name(u64 p) { return p % 6 == 1 ? "p = 1 mod 6" : "p = 5 mod 6"; }

nlohmann::json residue_witness(const PadicResidue& lhs, const PadicResidue& rhs) {
  return {{"lhs", lhs.value()}, {"rhs", rhs.value()}, {"modulus", lhs.modulus()}};
}

Verdict compare(const std::string& what, const PadicResidue& lhs, const PadicResidue& rhs,
                nlohmann::json extra = nlohmann::json::object()) {
  nlohmann::json w = residue_witness(lhs, rhs);
  for (auto& [k, v] : extra.items()) w[k] = v;
  const std::string mod = std::to_string(lhs.modulus());
  Verdict v = lhs == rhs ? Verdict::pass(what + " holds modulo " + mod, w)
                         : Verdict::fail(what + " fails modulo " + mod, w);
  v.certified = v.passed();
  return v;
}

// Sum_{k=0}^{last} ((x)_k / k!)^3 as one exact rational.
BigRational cubic_sum(const BigRational& x, long last) {
  BigRational term = 1, sum = 1;
  for (long k = 0; k < last; ++k) {
    const BigRational r = (x + k) / BigRational(k + 1);
    term *= r * r * r;
    sum += term;
  }
  return sum;
}

// Left sides of the closed-form checks, reused by the truncated-sum checks.
BigRational prop_lhs(Branch which, u64 pu) {
  const long p = static_cast<long>(pu);
  const BigRational p2 = BigRational(p) * p;
  if (which == Branch::kA) {
    const long K = (2 * p + 1) / 3;
    BigRational s = 0;
    for (long i = 1; i <= K; ++i) s += 4 * p2 / BigRational((3 * i - 2) * (3 * i - 2));
    const BigRational ratio = rising_rational(BigRational(1, 3), K) / rising_rational(1, K);
    return ratio * ratio * (1 + 6 * p2 - s);
  }
  const long K = (p + 1) / 3;
  BigRational s = 0;
  for (long i = 1; i <= K; ++i) s += BigRational(1, (3 * i - 2) * (3 * i - 2));
  const BigRational ratio = rising_rational(BigRational(1, 3), K) / rising_rational(1, (p - 2) / 3);
  return ratio * ratio * (1 + p2 / ((p + 1) * BigRational(p + 1)) * s);
}

void require_branch(Branch which, u64 p) {
  const u64 want = which == Branch::kA ? 1 : 5;
  if (p % 6 != want) {
    throw Error(ErrorCode::kParameterDomain,
                "p = " + std::to_string(p) + " is not " + std::to_string(want) + " mod 6");
  }
}

struct GammaCache {
  std::shared_mutex mu;
  std::map<std::tuple<u64, int, u64>, u64> values;
};

GammaCache& gamma_cache() {
  static GammaCache c;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- residues

PadicResidue::PadicResidue(u64 value, u64 p, u64 modulus) : v_(value % modulus), p_(p), m_(modulus) {}

PadicResidue PadicResidue::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::kNotPAdicUnit, std::to_string(v_) + " is not a unit");
  BigInt r;
  mpz_invert(r.get_mpz_t(), to_big(v_).get_mpz_t(), to_big(m_).get_mpz_t());
  return {from_big(r), p_, m_};
}

PadicResidue PadicResidue::pow(unsigned e) const {
  u64 r = 1 % m_, b = v_;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, m_);
    b = mulmod(b, b, m_);
  }
  return {r, p_, m_};
}

PadicResidue operator+(const PadicResidue& a, const PadicResidue& b) {
  return {static_cast<u64>((static_cast<u128>(a.v_) + b.v_) % a.m_), a.p_, a.m_};
}

PadicResidue operator-(const PadicResidue& a) { return {(a.m_ - a.v_) % a.m_, a.p_, a.m_}; }

PadicResidue operator-(const PadicResidue& a, const PadicResidue& b) { return a + (-b); }

PadicResidue operator*(const PadicResidue& a, const PadicResidue& b) {
  return {mulmod(a.v_, b.v_, a.m_), a.p_, a.m_};
}

// ----------------------------------------------------------------- context

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PadicContext::PadicContext(u64 p, int k, bool negate_gamma) : p_(p), k_(k), m_(1), negate_gamma_(negate_gamma) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorCode::kParameterDomain, "p must be a prime >= 5, got " + std::to_string(p));
  }
  if (k < 1 || k > 4) throw Error(ErrorCode::kParameterDomain, "precision k must be in 1..4");
  for (int i = 0; i < k; ++i) {
    if (m_ > (u64{1} << 62) / p) throw Error(ErrorCode::kParameterDomain, "p^k does not fit in 62 bits");
    m_ *= p;
  }
}

PadicResidue PadicContext::residue(const BigRational& x) const {
  const u64 den = reduce(x.get_den(), m_);
  if (den % p_ == 0) {
    throw Error(ErrorCode::kNotPAdicUnit, "denominator of " + to_text(x) + " is divisible by " +
                                              std::to_string(p_));
  }
  return PadicResidue(reduce(x.get_num(), m_), p_, m_) / PadicResidue(den, p_, m_);
}

PadicResidue PadicContext::gamma_at(u64 r) const {
  GammaCache& cache = gamma_cache();
  const auto key = std::make_tuple(p_, k_, r);
  u64 value;
  bool found = false;
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) {
      value = it->second;
      found = true;
    }
  }
  if (!found) {
    u64 prod = 1 % m_;
    for (u64 j = 1; j < r; ++j) {
      if (j % p_ != 0) prod = mulmod(prod, j, m_);
    }
    value = r % 2 ? (m_ - prod) % m_ : prod;
    std::unique_lock lock(cache.mu);
    cache.values.emplace(key, value);
  }
  PadicResidue g(value, p_, m_);
  return negate_gamma_ ? -g : g;
}

PadicResidue PadicContext::gamma(const BigRational& x) const { return gamma_at(residue(x).value()); }

// ------------------------------------------------------------------ sums

BigRational rising_rational(const BigRational& x, long m) {
  BigRational r = 1;
  for (long j = 0; j < m; ++j) r *= x + j;
  return r;
}

BigRational harmonic(long m, int order) {
  if (order != 1 && order != 2) throw Error(ErrorCode::kParameterDomain, "harmonic order must be 1 or 2");
  BigRational s = 0;
  for (long k = 1; k <= m; ++k) s += BigRational(1, order == 1 ? k : k * k);
  return s;
}

RationalSides cor_sides(Branch which, u64 pu) {
  require_branch(which, pu);
  const long p = static_cast<long>(pu);
  if (which == Branch::kA) {
    return {cubic_sum(BigRational(-1, 3), (2 * p + 1) / 3), 6 * prop_lhs(Branch::kA, pu)};
  }
  return {cubic_sum(BigRational(-1, 3), (p + 1) / 3), 54 * prop_lhs(Branch::kB, pu)};
}

// ----------------------------------------------------------------- checks

Verdict check_long(const PadicContext& ctx) {
  const u64 p = ctx.p();
  const PadicResidue lhs = ctx.residue(cubic_sum(BigRational(1, 3), static_cast<long>(p) - 1));
  const PadicResidue g6 = ctx.gamma(BigRational(1, 3)).pow(6);
  const BigRational p2 = BigRational(static_cast<long>(p)) * static_cast<long>(p);
  const PadicResidue rhs = p % 6 == 1 ? g6 : ctx.residue(-p2 / 3) * g6;
  return compare("truncated (1/3)_k^3 sum, " + branch_name(p), lhs, rhs);
}

Verdict check_liu(const PadicContext& ctx) {
  const u64 p = ctx.p();
  const PadicResidue lhs = ctx.residue(cubic_sum(BigRational(-1, 3), static_cast<long>(p) - 1));
  const PadicResidue g6 = ctx.gamma(BigRational(2, 3)).pow(6);
  const BigRational p2 = BigRational(static_cast<long>(p)) * static_cast<long>(p);
  const PadicResidue rhs = p % 6 == 1 ? ctx.residue(-18 * p2) * g6 : ctx.residue(54) * g6;
  return compare("truncated (-1/3)_k^3 sum, " + branch_name(p), lhs, rhs);
}

Verdict check_cor(Branch which, const PadicContext& ctx) {
  const RationalSides s = cor_sides(which, ctx.p());
  return compare("truncated sum against its closed form", ctx.residue(s.lhs), ctx.residue(s.rhs),
                 {{"lhs_exact", to_text(s.lhs)}, {"rhs_exact", to_text(s.rhs)}});
}

Verdict check_prop(Branch which, const PadicContext& ctx) {
  require_branch(which, ctx.p());
  const BigRational l = prop_lhs(which, ctx.p());
  const PadicResidue g6 = ctx.gamma(BigRational(2, 3)).pow(6);
  const long p = static_cast<long>(ctx.p());
  const PadicResidue rhs = which == Branch::kA ? ctx.residue(BigRational(-3 * p * p)) * g6 : g6;
  return compare("closed form against Gamma_p(2/3)^6", ctx.residue(l), rhs);
}

Verdict check_harmonic_cong(const PadicContext& ctx) {
  const u64 pu = ctx.p();
  require_branch(Branch::kB, pu);
  const long p = static_cast<long>(pu);
  BigRational lhs = 0;
  for (long i = 1; i <= (p + 1) / 3; ++i) lhs += BigRational(1, (3 * i - 2) * (3 * i - 2));
  const BigRational rhs = BigRational(2, 9) * harmonic((2 * p - 1) / 3, 2);
  const PadicContext modp(pu, 1);
  return compare("harmonic congruence", modp.residue(lhs), modp.residue(rhs),
                 {{"lhs_exact", to_text(lhs)}, {"rhs_exact", to_text(rhs)}});
}

Verdict check_gamma_invariants(const PadicContext& ctx) {
  const u64 p = ctx.p();
  long checked = 0;
  auto fail = [&](const std::string& what, nlohmann::json w) {
    w["checked_before_failure"] = checked;
    return Verdict::fail(what, std::move(w));
  };
  // Gamma_p(r) = (-1)^r (r-1)! for 1 <= r < p.
  PadicResidue fact = ctx.residue(1);
  for (u64 r = 1; r < p; ++r) {
    if (r > 1) fact = fact * ctx.residue(static_cast<long>(r - 1));
    const PadicResidue want = r % 2 ? -fact : fact;
    if (!(ctx.gamma_at(r) == want)) {
      return fail("Gamma_p(r) differs from (-1)^r (r-1)!",
                  {{"r", r}, {"gamma", ctx.gamma_at(r).value()}, {"expected", want.value()}});
    }
    ++checked;
  }
  // Functional equation on integer representatives and on j/3.
  std::vector<BigRational> xs;
  for (u64 r = 0; r < p * p; ++r) xs.emplace_back(static_cast<long>(r));
  for (long j = 1; j <= static_cast<long>(p); ++j) xs.emplace_back(j, 3);
  for (const auto& x : xs) {
    const PadicResidue rx = ctx.residue(x);
    const PadicResidue factor = rx.is_unit() ? -rx : -ctx.residue(1);
    if (!(ctx.gamma(x + 1) == factor * ctx.gamma(x))) {
      return fail("functional equation fails", {{"x", to_text(x)}});
    }
    ++checked;
  }
  // Reflection: Gamma_p(x) Gamma_p(1-x) = (-1)^(<-x>_p - 1).
  std::vector<BigRational> rs = {BigRational(1, 3), BigRational(2, 3)};
  for (long r = 0; r <= static_cast<long>(p); ++r) rs.emplace_back(r);
  for (const auto& x : rs) {
    const PadicContext modp(p, 1);
    const u64 least = modp.residue(-x).value();
    const PadicResidue sign = (least + 1) % 2 == 0 ? ctx.residue(1) : -ctx.residue(1);
    if (!(ctx.gamma(x) * ctx.gamma(1 - x) == sign)) {
      return fail("reflection formula fails", {{"x", to_text(x)}});
    }
    ++checked;
  }
  Verdict v = Verdict::pass("Gamma_p invariants hold", {{"checked", checked}, {"modulus", ctx.modulus()}});
  v.certified = true;
  return v;
}

}  // namespace qsc
