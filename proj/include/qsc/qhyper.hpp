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

#ifndef QSC_QHYPER_HPP_
#define QSC_QHYPER_HPP_

#include <optional>
#include <vector>

#include "qsc/formula.hpp"
#include "qsc/laurent_poly.hpp"
#include "qsc/rational_func.hpp"
#include "qsc/verdict.hpp"

namespace qsc {

// [n] = 1 + q + ... + q^{n-1}.
LaurentPoly q_integer(long n);

struct QPochSpec {
  RationalFunc x;
  long step = 1;
  long count = 0;
};

// (x; q^step)_count.
RationalFunc q_pochhammer(const QPochSpec& spec);

struct SeriesSpec {
  std::vector<RationalFunc> upper;
  std::vector<RationalFunc> lower;
  long step = 1;
  RationalFunc argument = RationalFunc(1);
  long truncation = 0;
};

// sum_{k=0}^{truncation} (upper; q^s)_k / ((q^s; q^s)_k (lower; q^s)_k) z^k.
// Terms past a vanishing upper factor are zero and are not formed.
RationalFunc truncated_phi(const SeriesSpec& spec);

struct Sides {
  RationalFunc lhs;
  RationalFunc rhs;
};

// Both sides of the n = 1 (mod 6) congruence modulo Phi_n^3.  n = 1 is
// rejected unless allow_degenerate is set.
Sides thm_a_sides(long n, bool allow_degenerate = false);

// Both sides of the n = 5 (mod 6) congruence.  perturb_theta replaces the
// 3q^3 term in the numerator of theta_n by 4q^3 (fault fixture).
Sides thm_b_sides(long n, bool perturb_theta = false);

struct CheckOptions {
  long grid_margin = 0;
  // Points per swept variable instead of bound + 1 + margin.
  std::optional<long> points_override;
  bool allow_degenerate = false;
};

// The three-substitution decomposition of the parametric congruence modulo
// (1 - a q^{tn})(a - q^{tn})(b - q^{tn}).
Verdict thm_c_check(long n, int t, const CheckOptions& opt = {});

Verdict lemma21_check(long m, const CheckOptions& opt = {});

enum class Identity { kSaalschutz, kRel4phi3, kEq21, kRel5phi4 };
Verdict identity_check(Identity which, long m, const CheckOptions& opt = {});

// s = 2 with modulus Phi_n (n = 1 mod 6), s = 1 (n = 5 mod 6).
enum class WeiVariant { kDD, kEE };
Verdict wei_chain_check(WeiVariant which, long n, const CheckOptions& opt = {});
Verdict lhopital_check(WeiVariant which, long n, const CheckOptions& opt = {});

// Expression builders, exposed for tests.  Parameters are monomial
// expressions: a free variable, a power of q or a rational constant.
namespace formulas {

Expr q_int(long n);
Expr lemma21_lhs(long m, const Expr& a, const Expr& b);
Expr lemma21_rhs(long m, const Expr& a, const Expr& b);
Expr saalschutz_lhs(long m, const Expr& a, const Expr& b, const Expr& c);
Expr saalschutz_rhs(long m, const Expr& a, const Expr& b, const Expr& c);
Expr phi43(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x);
Expr rel4phi3_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x);
Expr omega(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x);
Expr phi54(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x, const Expr& y);
Expr rel5phi4_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x,
                  const Expr& y);
Expr rel5phi4_omega_rhs(long m, const Expr& a, const Expr& b, const Expr& c, const Expr& x,
                        const Expr& y);
Expr thm_c_lhs(long n, int t, const Expr& a, const Expr& b);
Expr thm_c_rhs(long n, int t, const Expr& a, const Expr& b);
Expr wei_lhs(WeiVariant v, long n, const Expr& a);
// form 1 keeps the (q^2, q^3; q^3) quotient, form 2 is the expanded brace.
Expr wei_rhs(WeiVariant v, long n, const Expr& a, int form);
Expr lhopital_bracket(WeiVariant v, long n, const Expr& a);
Expr lhopital_limit(WeiVariant v, long n);

}  // namespace formulas

}  // namespace qsc

#endif  // QSC_QHYPER_HPP_
