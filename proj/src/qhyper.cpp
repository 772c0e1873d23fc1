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

#include "qsc/qhyper.hpp"

#include <string>
#include <utility>

#include "qsc/cyclotomic.hpp"
#include "qsc/errors.hpp"
#include "qsc/pit.hpp"

namespace qsc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kParameterDomain, what);
}

bool is_monomial(const RationalFunc& r) {
  return r.num_poly().degree() <= 0 && r.den_poly().degree() <= 0;
}

// Product of a list of Laurent polynomials by a balanced tree.
LaurentPoly lp_product(std::vector<LaurentPoly> v) {
  if (v.empty()) return LaurentPoly::constant(1);
  while (v.size() > 1) {
    std::vector<LaurentPoly> next;
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] * v[i + 1]);
    if (v.size() % 2) next.push_back(std::move(v.back()));
    v = std::move(next);
  }
  return v[0];
}

// sum_{i=1}^{K} 3q^{3i-2}/[3i-2]^2 - (1+5q+3q^2)/(1+q)
RationalFunc harmonic_bracket(long K) {
  RationalFunc s;
  for (long i = 1; i <= K; ++i) {
    const LaurentPoly qi = q_integer(3 * i - 2);
    s += RationalFunc::normalize(LaurentPoly::monomial(3, 3 * i - 2), qi * qi);
  }
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly one = LaurentPoly::constant(1);
  return s - RationalFunc::normalize(one + 5 * q + 3 * (q * q), one + q);
}

RationalFunc shared_prefactor(long K) {
  const RationalFunc a = q_pochhammer({RationalFunc::q_power(1), 3, K});
  const RationalFunc b = q_pochhammer({RationalFunc::q_power(3), 3, K});
  return RationalFunc(LaurentPoly::constant(1) + LaurentPoly::q()) * (a * a) / (b * b);
}

RationalFunc theorem_lhs(long K) {
  SeriesSpec s;
  const RationalFunc qm1 = RationalFunc::q_power(-1);
  s.upper = {qm1, qm1, qm1};
  s.lower = {RationalFunc::q_power(3), RationalFunc::q_power(3)};
  s.step = 3;
  s.argument = RationalFunc::q_power(9);
  s.truncation = K;
  return truncated_phi(s);
}

}  // namespace

LaurentPoly q_integer(long n) {
  require(n >= 1, "q-integer needs n >= 1");
  std::vector<std::pair<long, BigRational>> t;
  for (long i = 0; i < n; ++i) t.emplace_back(i, BigRational(1));
  return LaurentPoly::from_terms(t);
}

RationalFunc q_pochhammer(const QPochSpec& spec) {
  require(spec.step >= 1, "q-Pochhammer step must be >= 1");
  require(spec.count >= 0, "q-Pochhammer count must be >= 0");
  if (is_monomial(spec.x)) {
    std::vector<LaurentPoly> f;
    for (long j = 0; j < spec.count; ++j) {
      f.push_back(LaurentPoly::constant(1) -
                  LaurentPoly::monomial(spec.x.content(), spec.x.shift() + spec.step * j));
    }
    return RationalFunc(lp_product(std::move(f)));
  }
  RationalFunc acc(1);
  for (long j = 0; j < spec.count; ++j) {
    acc *= RationalFunc(1) - spec.x * RationalFunc::q_power(spec.step * j);
  }
  return acc;
}

RationalFunc truncated_phi(const SeriesSpec& spec) {
  require(spec.step >= 1, "series step must be >= 1");
  require(spec.truncation >= 0, "series truncation must be >= 0");
  std::vector<RationalFunc> ratios;
  for (long k = 1; k <= spec.truncation; ++k) {
    const RationalFunc shift = RationalFunc::q_power(spec.step * (k - 1));
    RationalFunc num(1);
    for (const auto& u : spec.upper) num *= RationalFunc(1) - u * shift;
    if (num.is_zero()) break;
    RationalFunc den = RationalFunc(1) - RationalFunc::q_power(spec.step * k);
    for (const auto& l : spec.lower) {
      const RationalFunc f = RationalFunc(1) - l * shift;
      if (f.is_zero()) {
        throw Error(ErrorCode::kIdenticallyZeroDenominator,
                    "lower parameter factor vanishes at term " + std::to_string(k));
      }
      den *= f;
    }
    ratios.push_back(num / den * spec.argument);
  }
  return cumulative_series(ratios);
}

Sides thm_a_sides(long n, bool allow_degenerate) {
  require(n >= 1 && n % 6 == 1, "n must be 1 mod 6");
  require(n > 1 || allow_degenerate, "n = 1 is degenerate");
  require((2 - 2 * n) % 3 == 0, "prefactor exponent (2-2n)/3 must be an integer");
  const long K = (2 * n + 1) / 3;
  const LaurentPoly q2n = q_integer(2 * n);
  RationalFunc brace = RationalFunc(3) - RationalFunc(q2n * q2n) * harmonic_bracket(K);
  RationalFunc rhs = RationalFunc::q_power((2 - 2 * n) / 3) * shared_prefactor(K) * brace;
  return {theorem_lhs(K), std::move(rhs)};
}

Sides thm_b_sides(long n, bool perturb_theta) {
  require(n >= 5 && n % 6 == 5, "n must be 5 mod 6");
  require((2 - n) % 3 == 0, "prefactor exponent (2-n)/3 must be an integer");
  const long K = (n + 1) / 3;
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly one = LaurentPoly::constant(1);
  auto qp = [](long e) { return LaurentPoly::monomial(1, e); };
  const LaurentPoly tail = LaurentPoly::constant(4) - 4 * q - 6 * qp(2) +
                           LaurentPoly::monomial(perturb_theta ? 4 : 3, 3);
  const LaurentPoly theta_num = (one - q - 3 * qp(2)) * (one - 2 * qp(n)) + tail * qp(2 * n);
  const LaurentPoly gap = q - qp(n);
  const RationalFunc theta = RationalFunc::normalize(theta_num, (one + q) * gap * gap);
  const LaurentPoly qn = q_integer(n);
  RationalFunc brace = theta + RationalFunc(qn * qn) * harmonic_bracket(K);
  RationalFunc rhs = RationalFunc::q_power((2 - n) / 3) * shared_prefactor(K) * brace;
  return {theorem_lhs(K), std::move(rhs)};
}

// ------------------------------------------------------------ expressions

namespace formulas {

namespace {

const Expr kOne(1L);

Expr poch(const Expr& x, long k, int step = 1) { return qpoch(x, step, k); }

// Product of Pochhammer symbols with a shared base and length.
Expr poch(const std::vector<Expr>& xs, long k, int step = 1) {
  Expr r = kOne;
  for (const auto& x : xs) r = r * qpoch(x, step, k);
  return r;
}

Expr phi(const std::vector<Expr>& upper, const std::vector<Expr>& lower, long m) {
  return phi_series(upper, lower, 1, qv(1), m);
}

}  // namespace

Expr q_int(long n) {
  Expr r;
  for (long i = 0; i < n; ++i) r = r + qv(static_cast<int>(i));
  return r;
}

Expr lemma21_lhs(long m, const Expr& a, const Expr& b) {
  const int mi = static_cast<int>(m);
  return phi_series({a, b, qv(-mi)}, {qv(1), a * b * qv(2 - mi)}, 1, qv(3), m);
}

Expr lemma21_rhs(long m, const Expr& a, const Expr& b) {
  const int mi = static_cast<int>(m);
  const Expr qm = qv(mi);
  const Expr q = qv(1);
  const Expr pre = poch({kOne / a, kOne / b}, m) / poch({q, kOne / (a * b)}, m);
  const Expr first = qm * (kOne - qm) * (q - a * b * qv(2) - (kOne + q - a * q - b * q) * qm) /
                     ((kOne - a * b * q) * (a * q - qm) * (b * q - qm));
  const Expr second = (kOne - a * b - (Expr(2L) - a - b) * qm) / ((kOne - a) * (kOne - b));
  return pre * (first - second);
}

Expr saalschutz_lhs(long m, const Expr& a, const Expr& b, const Expr& c) {
  const int mi = static_cast<int>(m);
  return phi({a, b, qv(-mi)}, {c, a * b * qv(1 - mi) / c}, m);
}

Expr saalschutz_rhs(long m, const Expr& a, const Expr& b, const Expr& c) {
  return poch({c / a, c / b}, m) / poch({c, c / (a * b)}, m);
}

Expr phi43(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x) {
  const int mi = static_cast<int>(m);
  return phi({a, b, x * qv(1), qv(-mi)}, {c * qv(1), x, a * b * qv(1 - mi) / c}, m);
}

Expr rel4phi3_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x) {
  const int mi = static_cast<int>(m);
  const Expr qm = qv(mi);
  const Expr common = (kOne - x) * (a * b - c * c * qm);
  const Expr s1 = phi({a, b, qv(-mi)}, {c, a * b * qv(1 - mi) / c}, m);
  const Expr s2 = phi({a, b, qv(-mi)}, {c * qv(1), a * b * qv(-mi) / c}, m);
  return (kOne - c) * (a * b - c * x * qm) / common * s1 +
         (c - x) * (a * b - c * qm) / common * s2;
}

Expr omega(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x) {
  const int mi = static_cast<int>(m);
  const Expr qm = qv(mi);
  const Expr pre = poch({c / a, c / b}, m) / poch({qv(1) * c, c / (a * b)}, m);
  const Expr first = (kOne - c * qm) * (a * b - c * x * qm) / ((kOne - x) * (a * b - c * c * qm));
  const Expr second = (c - x) * (a * b - c) * (a - c * qm) * (b - c * qm) /
                      ((kOne - x) * (a - c) * (b - c) * (a * b - c * c * qm));
  return pre * (first + second);
}

Expr phi54(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x, const Expr& y) {
  const int mi = static_cast<int>(m);
  return phi({a, b, x * qv(1), y * qv(1), qv(-mi)}, {c * qv(2), x, y, a * b * qv(1 - mi) / c}, m);
}

namespace {

std::pair<Expr, Expr> rel5phi4_coefficients(long m, const Expr& a, const Expr& b, const Expr& c,
                                            const Expr& y) {
  const int mi = static_cast<int>(m);
  const Expr qm = qv(mi);
  const Expr q = qv(1);
  const Expr common = (kOne - y) * (a * b - c * c * qv(mi + 1));
  return {(kOne - c * q) * (a * b - c * y * qm) / common,
          (c * q - y) * (a * b - c * qm) / common};
}

}  // namespace

Expr rel5phi4_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x,
                  const Expr& y) {
  const int mi = static_cast<int>(m);
  auto [k1, k2] = rel5phi4_coefficients(m, a, b, c, y);
  const Expr s2 = phi({a, b, x * qv(1), qv(-mi)}, {c * qv(2), x, a * b * qv(-mi) / c}, m);
  return k1 * phi43(m, a, b, c, x) + k2 * s2;
}

Expr rel5phi4_omega_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x,
                        const Expr& y) {
  auto [k1, k2] = rel5phi4_coefficients(m, a, b, c, y);
  return k1 * omega(m, a, b, c, x) + k2 * omega(m, a, b, c * qv(1), x);
}

Expr thm_c_lhs(long n, int t, const Expr& a, const Expr& b) {
  const long K = (t * n + 1) / 3;
  const Expr qm1 = qv(-1);
  return phi_series({a * qm1, qm1 / a, qm1 / b}, {qv(3), qv(3) / b}, 3, qv(9), K);
}

namespace {

Expr a_n(long n, int t, const Expr& b) {
  const int tn = static_cast<int>(t * n);
  const Expr q = qv(1);
  const Expr first =
      b * (kOne - qv(tn + 1)) *
      (qv(tn + 2) / b - q + qv(tn - 1) * (kOne + qv(3) - qv(tn + 2) - qv(2) / b)) /
      ((kOne - q) * (kOne - b * qv(tn - 1)) * (kOne - qv(tn + 1) / b));
  const Expr second = (kOne - qv(tn - 2) / b - qv(tn + 1) * (Expr(2L) - qv(tn - 1) - qv(-1) / b)) /
                      ((kOne - qv(tn - 1)) * (kOne - qv(-1) / b));
  return first - second;
}

Expr b_ab(const Expr& a, const Expr& b) {
  const Expr q = qv(1);
  const Expr first = (kOne - b * q) * (kOne - q - b * (qv(-2) + q - a - kOne / a)) /
                     (q * (kOne - q) * (kOne - a * b / q) * (kOne - b / (a * q)));
  const Expr second = (kOne - qv(-2) - b * (Expr(2L) * q - a - kOne / a)) /
                      (b * q * (kOne - a * qv(-1)) * (kOne - qv(-1) / a));
  return first - second;
}

}  // namespace

Expr thm_c_rhs(long n, int t, const Expr& a, const Expr& b) {
  const int tn = static_cast<int>(t * n);
  const long K = (t * n + 1) / 3;
  const int Ki = static_cast<int>(K);
  const Expr q = qv(1);
  const Expr qtn = qv(tn);
  const Expr ab = (a - b) * (kOne - a * b);
  const Expr t1 = (b - qtn) * (a * b - kOne - a * a + a * qtn) / ab;
  const Expr p1 = poch({b * q, q}, K, 3) / (power(b * q, Ki) * poch({kOne / b, qv(3)}, K, 3));
  const Expr t2 = (kOne - a * qtn) * (a - qtn) / ab;
  const Expr p2 = poch({a * q, q / a}, K, 3) / (power(b, Ki) * poch({kOne / b, kOne / (b * q)}, K, 3));
  return t1 * p1 * a_n(n, t, b) + t2 * p2 * b_ab(a, b);
}

Expr wei_lhs(WeiVariant v, long n, const Expr& a) {
  const long K = v == WeiVariant::kDD ? (2 * n + 1) / 3 : (n + 1) / 3;
  const Expr qm1 = qv(-1);
  return phi_series({a * qm1, qm1 / a, qm1}, {qv(3), qv(3)}, 3, qv(9), K);
}

namespace {

// C_n(q) written with N = 2n, so that N = n gives C_{n/2}(q).
Expr c_of(long N) {
  const int Ni = static_cast<int>(N);
  const Expr q = qv(1);
  const Expr den = q * power(kOne - q, 2) * power(kOne - qv(Ni - 1), 2);
  const Expr n1 = qv(3) + qv(Ni) * (kOne + qv(2 * Ni)) * (kOne - Expr(3L) * q + qv(3) - Expr(3L) * qv(4));
  const Expr n2 = qv(2 * Ni) * (kOne - Expr(3L) * q + Expr(6L) * qv(2) + Expr(2L) * qv(3) -
                                Expr(3L) * qv(4) + Expr(3L) * qv(5)) +
                  qv(4 * Ni + 3);
  return n1 / den + n2 / den;
}

Expr d_of(const Expr& a) {
  const Expr q = qv(1);
  const Expr num = (kOne + a + a * a) * (a - Expr(3L) * a * q + qv(3) + a * a * qv(3) - Expr(3L) * a * qv(4)) +
                   Expr(3L) * a * a * qv(2) * (Expr(2L) + qv(3));
  const Expr den = q * power(kOne - q, 2) * power(kOne - a * q, 2) * power(kOne - a / q, 2);
  return num / den;
}

struct WeiShape {
  long K;      // series length
  long N;      // 2n or n
  long short_len;  // (2n-2)/3 or (n-2)/3
  long sign;   // -1 for dd, +1 for ee in the expanded brace
};

WeiShape wei_shape(WeiVariant v, long n) {
  if (v == WeiVariant::kDD) return {(2 * n + 1) / 3, 2 * n, (2 * n - 2) / 3, -1};
  return {(n + 1) / 3, n, (n - 2) / 3, 1};
}

}  // namespace

Expr wei_rhs(WeiVariant v, long n, const Expr& a, int form) {
  const WeiShape s = wei_shape(v, n);
  const int Ni = static_cast<int>(s.N);
  const Expr q = qv(1);
  const Expr mod = (kOne - a * qv(Ni)) * (a - qv(Ni));
  const Expr oma2 = power(kOne - a, 2);
  const Expr qq = power(poch(q, s.K, 3), 2) / power(poch(qv(3), s.K, 3), 2);
  const Expr lead = qq / qv(static_cast<int>(s.K)) * c_of(s.N);
  if (form == 1) {
    return (oma2 + mod) / oma2 * lead +
           mod / oma2 * poch({a * q, q / a}, s.K, 3) / poch({qv(2), qv(3)}, s.short_len, 3) * d_of(a);
  }
  const Expr brace = Expr(s.sign) * qq * (Expr(3L) * q + Expr(3L) * qv(2)) -
                     Expr(s.sign) * poch({a * q, q / a}, s.K, 3) / power(poch(qv(3), s.K, 3), 2) *
                         power(kOne - q, 2) * d_of(a);
  return lead + mod / (qv(static_cast<int>(s.K)) * oma2) * brace;
}

Expr lhopital_bracket(WeiVariant v, long n, const Expr& a) {
  const WeiShape s = wei_shape(v, n);
  const int Ni = static_cast<int>(s.N);
  const Expr q = qv(1);
  const Expr mod = (kOne - a * qv(Ni)) * (a - qv(Ni));
  const Expr brace = Expr(s.sign) * power(poch(q, s.K, 3), 2) * (Expr(3L) * q + Expr(3L) * qv(2)) -
                     Expr(s.sign) * poch({a * q, q / a}, s.K, 3) * power(kOne - q, 2) * d_of(a);
  return mod / power(kOne - a, 2) * brace;
}

Expr lhopital_limit(WeiVariant v, long n) {
  const WeiShape s = wei_shape(v, n);
  const Expr q = qv(1);
  Expr h;
  for (long i = 1; i <= s.K; ++i) {
    h = h + Expr(3L) * qv(static_cast<int>(3 * i - 2)) / power(q_int(3 * i - 2), 2);
  }
  h = h - (kOne + Expr(5L) * q + Expr(3L) * qv(2)) / (kOne + q);
  return Expr(s.sign) * q * (kOne + q) * power(q_int(s.N), 2) * power(poch(q, s.K, 3), 2) * h;
}

}  // namespace formulas

// ----------------------------------------------------------------- checks

namespace {

using formulas::kOne;

const Expr kA = Expr::var(Var::kA);
const Expr kB = Expr::var(Var::kB);
const Expr kC = Expr::var(Var::kC);
const Expr kX = Expr::var(Var::kX);
const Expr kY = Expr::var(Var::kY);

Binding symbolic_q() {
  Binding b;
  b.set(Var::kQ, 1, 1);
  return b;
}

GridVar positive_grid(Var v) { return {v, 2, 1, {}}; }
GridVar grid_from(Var v, long start, long stride) { return {v, start, stride, {}}; }

Verdict combine(std::vector<std::pair<std::string, Verdict>> parts) {
  nlohmann::json w = nlohmann::json::object();
  bool certified = true;
  for (auto& [name, v] : parts) {
    w[name] = v.witness;
    w[name]["status"] = to_string(v.status);
    certified = certified && v.certified;
  }
  for (auto& [name, v] : parts) {
    if (!v.passed()) {
      Verdict f = Verdict::fail(name + ": " + v.detail, w);
      f.certified = certified;
      return f;
    }
  }
  Verdict p = Verdict::pass(certified ? "all sub-checks certified" : "all sub-checks sampled", w);
  p.certified = certified;
  return p;
}

}  // namespace

Verdict thm_c_check(long n, int t, const CheckOptions& opt) {
  require(t == 1 || t == 2, "t must be 1 or 2");
  require(n >= 1 && (n % 3) == (3 - t) % 3, "n must be 3 - t mod 3");
  require(n >= 2 || opt.allow_degenerate, "n = 1 is degenerate");
  const long tn = t * n;
  const Expr lhs = formulas::thm_c_lhs(n, t, kA, kB);
  const Expr rhs = formulas::thm_c_rhs(n, t, kA, kB);
  std::vector<std::pair<std::string, Verdict>> parts;
  Binding lo = symbolic_q();
  lo.set(Var::kA, 1, -tn);
  parts.emplace_back("a=q^-tn", verify_identity(lhs, rhs, lo, {positive_grid(Var::kB)},
                                                opt.grid_margin, opt.points_override));
  Binding hi = symbolic_q();
  hi.set(Var::kA, 1, tn);
  parts.emplace_back("a=q^tn", verify_identity(lhs, rhs, hi, {positive_grid(Var::kB)},
                                               opt.grid_margin, opt.points_override));
  Binding bb = symbolic_q();
  bb.set(Var::kB, 1, tn);
  parts.emplace_back("b=q^tn", verify_identity(lhs, rhs, bb, {positive_grid(Var::kA)},
                                               opt.grid_margin, opt.points_override));
  return combine(std::move(parts));
}

Verdict lemma21_check(long m, const CheckOptions& opt) {
  require(m >= 0, "m must be >= 0");
  const Expr lhs = formulas::lemma21_lhs(m, kA, kB);
  const Expr rhs = formulas::lemma21_rhs(m, kA, kB);
  return verify_identity(lhs, rhs, symbolic_q(), {positive_grid(Var::kA), positive_grid(Var::kB)},
                         opt.grid_margin, opt.points_override);
}

Verdict identity_check(Identity which, long m, const CheckOptions& opt) {
  require(m >= 0, "m must be >= 0");
  const GridVar ga = positive_grid(Var::kA);
  const GridVar gb = positive_grid(Var::kB);
  const GridVar gc = grid_from(Var::kC, -1, -1);
  const GridVar gx = grid_from(Var::kX, -2, -1);
  GridVar gy{Var::kY, BigRational(-1, 2), -1, {}};
  const Binding q = symbolic_q();
  switch (which) {
    case Identity::kSaalschutz:
      return verify_identity(formulas::saalschutz_lhs(m, kA, kB, kC),
                             formulas::saalschutz_rhs(m, kA, kB, kC), q, {ga, gb, gc},
                             opt.grid_margin, opt.points_override);
    case Identity::kRel4phi3:
      return verify_identity(formulas::phi43(m, kA, kB, kC, kX),
                             formulas::rel4phi3_rhs(m, kA, kB, kC, kX), q, {ga, gb, gc, gx},
                             opt.grid_margin, opt.points_override);
    case Identity::kEq21:
      return verify_identity(formulas::phi43(m, kA, kB, kC, kX), formulas::omega(m, kA, kB, kC, kX),
                             q, {ga, gb, gc, gx}, opt.grid_margin, opt.points_override);
    case Identity::kRel5phi4: {
      const Expr lhs = formulas::phi54(m, kA, kB, kC, kX, kY);
      std::vector<std::pair<std::string, Verdict>> parts;
      parts.emplace_back("series form",
                         verify_identity(lhs, formulas::rel5phi4_rhs(m, kA, kB, kC, kX, kY), q,
                                         {ga, gb, gc, gx, gy}, opt.grid_margin, opt.points_override));
      parts.emplace_back("omega form",
                         verify_identity(lhs, formulas::rel5phi4_omega_rhs(m, kA, kB, kC, kX, kY), q,
                                         {ga, gb, gc, gx, gy}, opt.grid_margin, opt.points_override));
      return combine(std::move(parts));
    }
  }
  throw Error(ErrorCode::kParameterDomain, "unknown identity");
}

namespace {

void require_wei(WeiVariant v, long n) {
  if (v == WeiVariant::kDD) {
    require(n > 1 && n % 6 == 1, "n must be 1 mod 6 and greater than 1");
  } else {
    require(n >= 5 && n % 6 == 5, "n must be 5 mod 6");
  }
}

}  // namespace

Verdict wei_chain_check(WeiVariant v, long n, const CheckOptions& opt) {
  require_wei(v, n);
  const long s = v == WeiVariant::kDD ? 2 : 1;
  const Expr lhs = formulas::wei_lhs(v, n, kA);
  std::vector<std::pair<std::string, Verdict>> parts;
  for (int form = 1; form <= 2; ++form) {
    const Expr rhs = formulas::wei_rhs(v, n, kA, form);
    const std::string tag = "form " + std::to_string(form) + " ";
    Binding hi = symbolic_q();
    hi.set(Var::kA, 1, s * n);
    parts.emplace_back(tag + "a=q^sn", verify_identity(lhs, rhs, hi, {}, 0));
    Binding lo = symbolic_q();
    lo.set(Var::kA, 1, -s * n);
    parts.emplace_back(tag + "a=q^-sn", verify_identity(lhs, rhs, lo, {}, 0));

    NestedGrid g;
    g.fixed = symbolic_q();
    g.vars = {{Var::kA, 2, 1, {0, 1}}};
    g.bounds = {identity_bounds(lhs, rhs, {Var::kA}).degree_bound(Var::kA)};
    g.pole_atoms = denominator_atoms(lhs);
    auto more = denominator_atoms(rhs);
    g.pole_atoms.insert(g.pole_atoms.end(), more.begin(), more.end());
    g.margin = opt.grid_margin;
    g.points_override = opt.points_override;
    PointCheck check = [&](const Binding& b) -> std::optional<nlohmann::json> {
      const Verdict c = congruent_mod_cyclotomic(evaluate(lhs, b), evaluate(rhs, b), n, 1);
      if (c.passed()) return std::nullopt;
      return c.witness;
    };
    parts.emplace_back(tag + "mod Phi_n", run_nested(g, check));
  }
  return combine(std::move(parts));
}

Verdict lhopital_check(WeiVariant v, long n, const CheckOptions& opt) {
  require_wei(v, n);
  const Expr bracket = formulas::lhopital_bracket(v, n, kA);
  const Expr limit = formulas::lhopital_limit(v, n);
  NestedGrid g;
  // q runs over the grid; a is the symbolic variable.
  g.fixed.set(Var::kA, 1, 1);
  g.vars = {{Var::kQ, 2, 1, {0, 1, -1}}};
  g.bounds = {identity_bounds(bracket, limit, {Var::kQ}).degree_bound(Var::kQ)};
  g.margin = opt.grid_margin;
  g.points_override = opt.points_override;
  PointCheck check = [&](const Binding& b) -> std::optional<nlohmann::json> {
    const RationalFunc f = evaluate(bracket, b);
    Binding at_q = b;
    const BigRational expected = evaluate(limit, at_q.set(Var::kA, 0)).eval(0);
    BigRational got;
    try {
      got = f.eval(1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPoleAtPoint) throw;
      return nlohmann::json{{"reason", "bracket does not vanish to order 2 at a = 1"},
                            {"bracket", nlohmann::json::parse(f.to_text())}};
    }
    if (got == expected) return std::nullopt;
    return nlohmann::json{{"limit", to_text(got)}, {"expected", to_text(expected)}};
  };
  return run_nested(g, check);
}

}  // namespace qsc
