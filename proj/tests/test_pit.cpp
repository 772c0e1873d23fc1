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

#include "qsc/pit.hpp"
#include "qsc/qhyper.hpp"
#include "test_util.hpp"

using namespace qsc;
using testutil::code_of;
using testutil::lp;
using testutil::rf;

namespace {

const Expr A = Expr::var(Var::kA);
const Expr B = Expr::var(Var::kB);
const Expr Cv = Expr::var(Var::kC);
const Expr X = Expr::var(Var::kX);
const Expr Y = Expr::var(Var::kY);

std::vector<BigRational> rationals(std::initializer_list<long> xs) {
  return std::vector<BigRational>(xs.begin(), xs.end());
}

// lhs - rhs as a rational function of v with the other variables fixed at
// generic rationals.
RationalFunc difference_in(Var v, const Expr& lhs, const Expr& rhs) {
  const std::pair<Var, BigRational> fixed[] = {{Var::kQ, BigRational(3, 2)}, {Var::kA, BigRational(5, 3)},
                                                {Var::kB, BigRational(7, 2)}, {Var::kC, BigRational(-4, 5)},
                                                {Var::kX, BigRational(-2, 7)}, {Var::kY, BigRational(9, 4)}};
  Binding b;
  for (const auto& [w, x] : fixed) b.set(w, w == v ? BigRational(1) : x, w == v ? 1 : 0);
  return evaluate(lhs, b) - evaluate(rhs, b);
}

long numerator_span(const RationalFunc& r) {
  if (r.is_zero()) return -1;
  return r.num().max_exp() - r.num().min_exp();
}

struct Fixture {
  const char* name;
  Expr lhs, rhs;
  std::vector<Var> vars;
};

std::vector<Fixture> identities() {
  using namespace formulas;
  std::vector<Fixture> f;
  for (long m : {1L, 2L, 3L}) {
    f.push_back({"lemma", lemma21_lhs(m, A, B), lemma21_rhs(m, A, B), {Var::kA, Var::kB}});
    f.push_back({"saalschutz", saalschutz_lhs(m, A, B, Cv), saalschutz_rhs(m, A, B, Cv),
                 {Var::kA, Var::kB, Var::kC}});
  }
  for (long m : {1L, 2L}) {
    f.push_back({"eq21", phi43(m, A, B, Cv, X), omega(m, A, B, Cv, X), {Var::kA, Var::kB, Var::kC, Var::kX}});
    f.push_back({"rel4phi3", phi43(m, A, B, Cv, X), rel4phi3_rhs(m, A, B, Cv, X),
                 {Var::kA, Var::kB, Var::kC, Var::kX}});
    f.push_back({"rel5phi4", phi54(m, A, B, Cv, X, Y), rel5phi4_omega_rhs(m, A, B, Cv, X, Y),
                 {Var::kA, Var::kB, Var::kC, Var::kX, Var::kY}});
  }
  return f;
}

}  // namespace

TEST_SUITE("pit") {
  TEST_CASE("ledger sums") {
    BoundLedger l;
    CHECK(l.degree_bound(Var::kX) == 0);
    l.add(Var::kX, "(1+x)^2", 2);
    CHECK(l.degree_bound(Var::kX) == 2);
    l.add(Var::kX, "prefactor", 3);
    CHECK(l.degree_bound(Var::kX) == 5);
    CHECK(l.to_json()["x"]["bound"] == 5);
    const Expr sq = power(1 + X, 2);
    const BoundLedger id = identity_bounds(sq, 1 + 2 * X + X * X, {Var::kX});
    CHECK(id.degree_bound(Var::kX) <= 2);
    CHECK(literal_bounds(sq, 1 + 2 * X + X * X, {Var::kX}).degree_bound(Var::kX) >= 2);
  }

  TEST_CASE("three points certify a quadratic") {
    const Expr sq = power(1 + X, 2);
    PointBuilder build = [&](const BigRational& x) {
      Binding b;
      b.set(Var::kX, x).set(Var::kQ, 1, 1);
      return std::make_pair(evaluate(sq, b), evaluate(1 + 2 * X + X * X, b));
    };
    GridSpec g;
    g.variable = "x";
    g.required_points = 3;
    CHECK(verify_on_grid(build, generate_grid(g)).passed());
  }

  TEST_CASE("grid generation") {
    GridSpec g;
    g.variable = "a";
    g.required_points = 3;
    g.exclusions = rationals({3});
    CHECK(generate_grid(g) == rationals({2, 4, 5}));
    g.required_points = 0;
    CHECK(generate_grid(g).empty());
    GridSpec h;
    h.variable = "b";
    h.required_points = 3;
    h.start = BigRational(1, 4);
    h.stride = BigRational(1, 4);
    const BigRational a = 2;
    h.excluded = [a](const BigRational& b) { return a * b == 1; };
    const auto pts = generate_grid(h);
    CHECK(pts == std::vector<BigRational>{BigRational(1, 4), BigRational(3, 4), BigRational(1)});
    GridSpec all_out;
    all_out.variable = "c";
    all_out.required_points = 2;
    all_out.excluded = [](const BigRational&) { return true; };
    CHECK(code_of([&] { generate_grid(all_out); }) == ErrorCode::kGridExhausted);
    GridSpec flat;
    flat.variable = "c";
    flat.required_points = 1;
    flat.stride = 0;
    CHECK(code_of([&] { generate_grid(flat); }) == ErrorCode::kParameterDomain);
  }

  TEST_CASE("pointwise comparison") {
    const RationalFunc r = rf(lp({{0, 1}}), lp({{0, 1}, {1, -1}}));
    PointBuilder same = [&](const BigRational&) { return std::make_pair(r, r); };
    CHECK(verify_on_grid(same, rationals({5, 2, 9})).passed());
    // (q, q + (x - 2) * 0 + 1) differs everywhere; the witness is the smallest point.
    PointBuilder off = [](const BigRational& x) {
      const RationalFunc q = RationalFunc::q_power(1);
      return std::make_pair(q, q + RationalFunc((x - 2) * 0 + 1));
    };
    const Verdict v = verify_on_grid(off, rationals({7, 3, 5}));
    CHECK(v.status == Status::kFail);
    CHECK(v.witness["point"] == "3/1");
    CHECK(v.witness.contains("difference"));
  }

  TEST_CASE("lemma fixture: m = 1 at a = 2, b = 3") {
    Binding b;
    b.set(Var::kQ, 1, 1).set(Var::kA, 2).set(Var::kB, 3);
    const RationalFunc expect = rf(lp({{0, 1}, {1, -7}, {2, 4}}), lp({{0, 1}, {1, -1}}) * lp({{0, 1}, {1, -6}}));
    CHECK(evaluate(formulas::lemma21_lhs(1, A, B), b) == expect);
    CHECK(evaluate(formulas::lemma21_rhs(1, A, B), b) == expect);
  }

  TEST_CASE("lemma m = 1 on a 6 x 6 grid") {
    const Verdict v = verify_identity(formulas::lemma21_lhs(1, A, B), formulas::lemma21_rhs(1, A, B),
                                      Binding().set(Var::kQ, 1, 1), {GridVar{Var::kA}, GridVar{Var::kB}}, 0, 6);
    CHECK(v.passed());
  }

  TEST_CASE("literal factor count for the lemma at m = 1") {
    const Expr l = formulas::lemma21_lhs(1, A, B), r = formulas::lemma21_rhs(1, A, B);
    const long literal = literal_bounds(l, r, {Var::kA}).degree_bound(Var::kA);
    CHECK(literal >= 4);
    CHECK(identity_bounds(l, r, {Var::kA}).degree_bound(Var::kA) <= literal);
  }

  TEST_CASE("bounds are conservative on perturbed identities") {
    for (const auto& f : identities()) {
      for (Var v : f.vars) {
        CAPTURE(f.name);
        CAPTURE(var_name(v));
        // The true identity vanishes identically in v.
        CHECK(difference_in(v, f.lhs, f.rhs).is_zero());
        const Expr vv = Expr::var(v);
        const std::vector<Expr> perturbed = {f.rhs * (1 + vv), f.rhs + vv * vv * vv,
                                             f.rhs + 1 / (1 - vv * qv(2)), f.rhs * vv / (2 - vv)};
        for (const auto& p : perturbed) {
          const long bound = identity_bounds(f.lhs, p, {v}).degree_bound(v);
          const long literal = literal_bounds(f.lhs, p, {v}).degree_bound(v);
          const long truth = numerator_span(difference_in(v, f.lhs, p));
          CHECK(truth >= 0);
          CHECK(bound >= truth);
          CHECK(literal >= bound);
        }
      }
    }
  }

  TEST_CASE("nested grids certify and report sampled runs") {
    const Verdict full = verify_identity(formulas::saalschutz_lhs(2, A, B, Cv), formulas::saalschutz_rhs(2, A, B, Cv),
                                         Binding().set(Var::kQ, 1, 1),
                                         {GridVar{Var::kA}, GridVar{Var::kB}, GridVar{Var::kC, -1, -1, {}}}, 0);
    CHECK(full.passed());
    CHECK(full.certified);
    const Verdict sampled = verify_identity(formulas::saalschutz_lhs(2, A, B, Cv), formulas::saalschutz_rhs(2, A, B, Cv),
                                            Binding().set(Var::kQ, 1, 1),
                                            {GridVar{Var::kA}, GridVar{Var::kB}, GridVar{Var::kC, -1, -1, {}}}, 0, 2);
    CHECK(sampled.passed());
    CHECK_FALSE(sampled.certified);
    const Verdict wrong = verify_identity(formulas::saalschutz_lhs(2, A, B, Cv),
                                          formulas::saalschutz_rhs(2, A, B, Cv) * (1 + A * qv(5)),
                                          Binding().set(Var::kQ, 1, 1),
                                          {GridVar{Var::kA}, GridVar{Var::kB}, GridVar{Var::kC, -1, -1, {}}}, 0);
    CHECK(wrong.status == Status::kFail);
  }
}
