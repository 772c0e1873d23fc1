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

#include "oracle.hpp"
#include "qsc/cyclotomic.hpp"
#include "qsc/qhyper.hpp"
#include "test_util.hpp"

using namespace qsc;
using testutil::code_of;
using testutil::lp;
using testutil::rf;
using testutil::value;

namespace {

const Expr A = Expr::var(Var::kA);
const Expr B = Expr::var(Var::kB);
const Expr Cv = Expr::var(Var::kC);
const Expr X = Expr::var(Var::kX);
const Expr Y = Expr::var(Var::kY);

BigRational br(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

const std::vector<BigRational>& sample_q() {
  static const std::vector<BigRational> qs = {br(2), br(-1, 3), br(5, 7)};
  return qs;
}

}  // namespace

TEST_SUITE("qhyper") {
  TEST_CASE("q-integers") {
    CHECK(q_integer(1) == lp({{0, 1}}));
    CHECK(q_integer(3) == lp({{0, 1}, {1, 1}, {2, 1}}));
    CHECK((q_integer(2) * q_integer(2)).eval(1) == 4);
  }

  TEST_CASE("q-shifted factorials") {
    CHECK(q_pochhammer({RationalFunc(7), 1, 0}) == RationalFunc(1));
    CHECK(q_pochhammer({RationalFunc::q_power(-1), 3, 2}) ==
          RationalFunc(lp({{0, 1}, {-1, -1}}) * lp({{0, 1}, {2, -1}})));
    CHECK(q_pochhammer({RationalFunc::q_power(1), 3, 1}) == RationalFunc(lp({{0, 1}, {1, -1}})));
    for (const auto& q : sample_q()) {
      const RationalFunc x = rf(lp({{0, 2}}), lp({{0, 3}, {1, 1}}));
      CHECK(q_pochhammer({x, 2, 4}).eval(q) == oracle::poch(x.eval(q), q * q, 4));
    }
  }

  TEST_CASE("truncated series") {
    SeriesSpec s;
    s.upper = {RationalFunc::q_power(-6), RationalFunc(3)};
    s.lower = {RationalFunc(5)};
    s.step = 3;
    s.argument = RationalFunc::q_power(2);
    s.truncation = 0;
    CHECK(truncated_phi(s) == RationalFunc(1));
    // q^{-6} = (q^3)^{-2}: the series stops after two terms.
    s.truncation = 2;
    const RationalFunc two = truncated_phi(s);
    s.truncation = 7;
    CHECK(truncated_phi(s) == two);
  }

  TEST_CASE("the t = 2, n = 1 sum equals the a-inserted sum at a = q^-2") {
    // b stays generic: b = 5.
    SeriesSpec s;
    s.upper = {RationalFunc::q_power(-3), RationalFunc::q_power(1), RationalFunc::q_power(-1) / RationalFunc(5)};
    s.lower = {RationalFunc::q_power(3), RationalFunc::q_power(3) / RationalFunc(5)};
    s.step = 3;
    s.argument = RationalFunc::q_power(9);
    s.truncation = 1;
    const RationalFunc phi = truncated_phi(s);
    for (const auto& q : sample_q()) {
      CHECK(phi.eval(q) == oracle::thm_c_lhs(q, oracle::pw(q, -2), 5, 1, 2));
    }
  }

  TEST_CASE("degenerate n = 1 diagnostics") {
    CHECK(code_of([] { thm_a_sides(1); }) == ErrorCode::kParameterDomain);
    const Sides s = thm_a_sides(1, true);
    const LaurentPoly t = lp({{0, 1}, {1, 1}, {2, 1}});
    CHECK(s.lhs == RationalFunc(1) - rf(lp({{6, 1}}), t * t * t));
    CHECK(s.rhs == rf(lp({{0, 1}, {1, 1}}) * lp({{0, 4}, {1, 3}, {2, 2}}), t * t));
    CHECK(s.lhs.eval(1) == br(26, 27));
    CHECK(s.rhs.eval(1) == 2);
  }

  TEST_CASE("main congruence sides agree with direct summation") {
    for (long n : {7L, 13L}) {
      const Sides s = thm_a_sides(n);
      for (const auto& q : sample_q()) {
        CHECK(s.lhs.eval(q) == oracle::thm_a_lhs(q, n));
        CHECK(s.rhs.eval(q) == oracle::thm_a_rhs(q, n));
      }
    }
    for (long n : {5L, 11L}) {
      const Sides s = thm_b_sides(n);
      for (const auto& q : sample_q()) {
        CHECK(s.lhs.eval(q) == oracle::thm_b_lhs(q, n));
        CHECK(s.rhs.eval(q) == oracle::thm_b_rhs(q, n));
      }
      CHECK(thm_b_sides(n, true).rhs.eval(2) != oracle::thm_b_rhs(2, n));
    }
  }

  TEST_CASE("main congruences") {
    for (long n : {7L, 13L}) CHECK(congruent_mod_cyclotomic(thm_a_sides(n).lhs, thm_a_sides(n).rhs, n, 3).passed());
    for (long n : {5L, 11L}) CHECK(congruent_mod_cyclotomic(thm_b_sides(n).lhs, thm_b_sides(n).rhs, n, 3).passed());
    CHECK(code_of([] { thm_a_sides(5); }) == ErrorCode::kParameterDomain);
    CHECK(code_of([] { thm_b_sides(7); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("theta numerator has a double root at q = 1") {
    for (long n : {5L, 11L, 17L}) {
      const auto num = [n](const BigRational& q) -> BigRational {
        const BigRational qn = oracle::pw(q, n);
        return (1 - q - 3 * q * q) * (1 - 2 * qn) + (4 - 4 * q - 6 * q * q + 3 * q * q * q) * qn * qn;
      };
      CHECK(num(1) == 0);
      // The canonical right side keeps a denominator prime to Phi_n.
      const RationalFunc rhs = thm_b_sides(n).rhs;
      CHECK_FALSE(remainder_monic(rhs.den_poly(), *cyclotomic_zpoly(n)).is_zero());
    }
  }

  TEST_CASE("identity builders agree with direct summation") {
    using namespace formulas;
    const BigRational q = br(3, 2), a = br(5, 3), b = br(7, 2), c = br(-4, 5), x = br(-2, 7), y = br(9, 4);
    const auto at = [&](const Expr& e) {
      return value(e, {{Var::kQ, q}, {Var::kA, a}, {Var::kB, b}, {Var::kC, c}, {Var::kX, x}, {Var::kY, y}});
    };
    for (long m : {0L, 1L, 2L, 4L}) {
      CAPTURE(m);
      CHECK(at(lemma21_lhs(m, A, B)) == oracle::lemma_lhs(q, a, b, m));
      CHECK(at(lemma21_rhs(m, A, B)) == oracle::lemma_rhs(q, a, b, m));
      CHECK(oracle::lemma_lhs(q, a, b, m) == oracle::lemma_rhs(q, a, b, m));
      CHECK(at(saalschutz_lhs(m, A, B, Cv)) == oracle::saal_lhs(q, a, b, c, m));
      CHECK(at(saalschutz_rhs(m, A, B, Cv)) == oracle::saal_rhs(q, a, b, c, m));
      CHECK(at(phi43(m, A, B, Cv, X)) == oracle::phi43(q, a, b, c, x, m));
      CHECK(at(omega(m, A, B, Cv, X)) == oracle::omega(q, a, b, c, x, m));
      CHECK(at(rel4phi3_rhs(m, A, B, Cv, X)) == oracle::phi43(q, a, b, c, x, m));
      CHECK(at(phi54(m, A, B, Cv, X, Y)) == oracle::phi54(q, a, b, c, x, y, m));
      CHECK(at(rel5phi4_omega_rhs(m, A, B, Cv, X, Y)) == oracle::rel5phi4_omega_rhs(q, a, b, c, x, y, m));
      CHECK(at(rel5phi4_rhs(m, A, B, Cv, X, Y)) == oracle::phi54(q, a, b, c, x, y, m));
    }
    for (int t : {1, 2}) {
      for (long n : {2L, 4L, 5L, 7L}) {
        if (n % 3 != (3 - t) % 3) continue;
        CHECK(at(thm_c_lhs(n, t, A, B)) == oracle::thm_c_lhs(q, a, b, n, t));
        CHECK(at(thm_c_rhs(n, t, A, B)) == oracle::thm_c_rhs(q, a, b, n, t));
      }
    }
  }

  TEST_CASE("Lemma fixtures") {
    CHECK(value(formulas::lemma21_lhs(0, A, B), {{Var::kQ, 3}, {Var::kA, 2}, {Var::kB, 5}}) == 1);
    CHECK(value(formulas::lemma21_rhs(0, A, B), {{Var::kQ, 3}, {Var::kA, 2}, {Var::kB, 5}}) == 1);
    const Verdict v = lemma21_check(1);
    CHECK(v.passed());
    CHECK(v.certified);
    CHECK(lemma21_check(5).passed());
    CHECK(code_of([] { lemma21_check(-1); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("finite identities") {
    CHECK(identity_check(Identity::kSaalschutz, 0).passed());
    CHECK(identity_check(Identity::kSaalschutz, 3).passed());
    CHECK(identity_check(Identity::kRel4phi3, 2).passed());
    CHECK(identity_check(Identity::kEq21, 2).passed());
    CHECK(identity_check(Identity::kRel5phi4, 3).passed());
    // eq21 at m = 2 with (a, b, c, x) = (2, 3, 5, 7) as rational functions of q.
    Binding b;
    b.set(Var::kQ, 1, 1).set(Var::kA, 2).set(Var::kB, 3).set(Var::kC, 5).set(Var::kX, 7);
    CHECK(evaluate(formulas::phi43(2, A, B, Cv, X), b) == evaluate(formulas::omega(2, A, B, Cv, X), b));
    CHECK(oracle::phi43(br(2, 5), 2, 3, 5, 7, 2) == oracle::omega(br(2, 5), 2, 3, 5, 7, 2));
    CheckOptions sampled;
    sampled.points_override = 2;
    const Verdict s = identity_check(Identity::kSaalschutz, 3, sampled);
    CHECK(s.passed());
    CHECK_FALSE(s.certified);
  }

  TEST_CASE("three-substitution decomposition") {
    const Verdict v = thm_c_check(2, 1);
    CHECK(v.passed());
    CHECK(v.certified);
    CHECK(thm_c_check(7, 2).passed());
    CHECK(code_of([] { thm_c_check(3, 1); }) == ErrorCode::kParameterDomain);
    CHECK(code_of([] { thm_c_check(2, 3); }) == ErrorCode::kParameterDomain);
    // b = q^{tn}: the sum equals the second term alone (q = 2 is a pole).
    for (const BigRational& q : {br(3), br(-1, 3), br(5, 7)}) {
      const BigRational b = q * q;
      CHECK(oracle::thm_c_lhs(q, 2, b, 2, 1) == oracle::thm_c_second_term(q, 2, b, 2, 1));
    }
    Binding at;
    at.set(Var::kQ, 1, 1).set(Var::kA, 2).set(Var::kB, 1, 2);
    CHECK(evaluate(formulas::thm_c_lhs(2, 1, A, B), at) == evaluate(formulas::thm_c_rhs(2, 1, A, B), at));
  }

  TEST_CASE("a-inserted congruences") {
    for (auto [v, n, dd] : {std::tuple{WeiVariant::kDD, 7L, true}, std::tuple{WeiVariant::kEE, 5L, false}}) {
      CAPTURE(n);
      const long K = oracle::wei_shape(dd, n).K;
      const long N = oracle::wei_shape(dd, n).N;
      for (const auto& q : sample_q()) {
        const BigRational a = br(5, 2);
        const auto at = [&](const Expr& e) { return value(e, {{Var::kQ, q}, {Var::kA, a}}); };
        CHECK(at(formulas::wei_lhs(v, n, A)) == oracle::wei_lhs(q, a, K));
        CHECK(at(formulas::wei_rhs(v, n, A, 1)) == oracle::wei_rhs1(q, a, dd, n));
        CHECK(at(formulas::wei_rhs(v, n, A, 2)) == oracle::wei_rhs2(q, a, dd, n));
        // At a = q^{+-N} both sides agree exactly.
        for (long s : {1L, -1L}) {
          const BigRational aq = oracle::pw(q, s * N);
          CHECK(oracle::wei_lhs(q, aq, K) == oracle::wei_rhs1(q, aq, dd, n));
          CHECK(oracle::wei_lhs(q, aq, K) == oracle::wei_rhs2(q, aq, dd, n));
        }
      }
      const Verdict c = wei_chain_check(v, n);
      CHECK(c.passed());
      CHECK(c.certified);
    }
    CHECK(code_of([] { wei_chain_check(WeiVariant::kDD, 5); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("limits at a = 1") {
    for (auto [v, n, dd, q0] :
         {std::tuple{WeiVariant::kDD, 7L, true, 2L}, std::tuple{WeiVariant::kEE, 5L, false, 3L}}) {
      CAPTURE(n);
      const oracle::LimitResult lim = oracle::limit(q0, dd, n);
      CHECK(lim.order0 == 0);
      CHECK(lim.order1 == 0);
      CHECK(lim.value == oracle::limit_closed(q0, dd, n));
      CHECK(value(formulas::lhopital_limit(v, n), {{Var::kQ, q0}}) == lim.value);
      Binding b;
      b.set(Var::kQ, q0).set(Var::kA, 1, 1);
      CHECK(evaluate(formulas::lhopital_bracket(v, n, A), b).eval(1) == lim.value);
      const Verdict c = lhopital_check(v, n);
      CHECK(c.passed());
      CHECK(c.certified);
    }
  }
}
