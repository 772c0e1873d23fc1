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

#ifndef QSC_FORMULA_HPP_
#define QSC_FORMULA_HPP_

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/bigrational.hpp"
#include "qsc/rational_func.hpp"
#include "qsc/zpoly.hpp"

namespace qsc {

// Symbols that may appear in a displayed formula.  q is the series base; the
// others are free parameters that the checks either substitute or sweep over
// a grid.
enum class Var : int { kQ = 0, kA, kB, kC, kX, kY };
inline constexpr int kNumVars = 6;
std::string_view var_name(Var v);

using Exponents = std::array<int, kNumVars>;

struct Monomial {
  BigRational coef;
  Exponents exp{};
};

// Multivariate Laurent polynomial with rational coefficients, terms sorted
// by exponent vector and never zero.
class MPoly {
 public:
  MPoly() = default;
  static MPoly constant(const BigRational& c);
  static MPoly monomial(const BigRational& c, const Exponents& e);
  static MPoly var(Var v, int power = 1);

  const std::vector<Monomial>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  bool is_monomial() const noexcept { return t_.size() == 1; }
  bool is_constant() const;
  bool is_one() const;
  int degree(Var v) const;
  int low(Var v) const;
  bool depends_on(Var v) const { return degree(v) != low(v); }

  // Divided by its lowest monomial and scaled so the first term has
  // coefficient 1; equal keys mean equal up to a unit monomial factor.
  MPoly key() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator<(const MPoly& a, const MPoly& b);

  std::string to_text() const;

 private:
  void canonicalize();
  std::vector<Monomial> t_;
};

enum class NodeKind { kConst, kAtom, kProduct, kSum, kSeries };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::kConst;
  MPoly poly;                                   // kConst, kAtom
  std::vector<std::pair<NodePtr, int>> factors;  // kProduct
  std::vector<NodePtr> terms;                   // kSum
  // kSeries: sum_{k=0}^{K} prod_{j=1}^{k} ratios[j-1], K = ratios.size()
  std::vector<NodePtr> ratios;
};

// Immutable expression handle.  Sums and products of polynomials collapse
// into single polynomial atoms while they stay small; everything else keeps
// its displayed factor structure, which the degree calculus relies on.
class Expr {
 public:
  Expr();
  Expr(const BigRational& c);  // NOLINT
  Expr(long c);                // NOLINT
  Expr(const MPoly& p);        // NOLINT
  explicit Expr(NodePtr node) : n_(std::move(node)) {}

  static Expr var(Var v, int power = 1) { return Expr(MPoly::var(v, power)); }

  const Node& node() const { return *n_; }
  const NodePtr& ptr() const { return n_; }
  bool is_poly() const {
    return n_->kind == NodeKind::kConst || n_->kind == NodeKind::kAtom;
  }
  bool is_monomial() const { return is_poly() && n_->poly.terms().size() <= 1; }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);

  std::string to_text() const;

 private:
  NodePtr n_;
};

Expr power(const Expr& base, int e);
Expr sum(const std::vector<Expr>& terms);
Expr series(const std::vector<Expr>& ratios);
inline Expr qv(int e) { return Expr::var(Var::kQ, e); }

// (x; q^step)_k = prod_{j<k} (1 - x q^{step j}) for a monomial x.
Expr qpoch(const Expr& x, int step, long k);

// Truncated basic hypergeometric series
//   sum_{k=0}^{K} (u_1..u_r; q^s)_k / ((q^s; q^s)_k (l_1..l_{r-1}; q^s)_k) z^k
// with monomial parameters.
Expr phi_series(const std::vector<Expr>& upper, const std::vector<Expr>& lower, int step,
                const Expr& z, long truncation);

// Assignment var -> coef * X^exp where X is the single symbolic variable of
// the resulting univariate rational function.
class Binding {
 public:
  Binding& set(Var v, const BigRational& coef, long exp = 0);
  bool is_set(Var v) const { return set_[static_cast<int>(v)]; }
  const BigRational& coef(Var v) const { return coef_[static_cast<int>(v)]; }
  long exp(Var v) const { return exp_[static_cast<int>(v)]; }

 private:
  std::array<BigRational, kNumVars> coef_{};
  std::array<long, kNumVars> exp_{};
  std::array<bool, kNumVars> set_{};
};

// Unreduced fraction  c * X^s * n / d  with n, d primitive, positive leading
// coefficient and nonzero constant term (n = 0 encodes zero).
struct Frac {
  BigRational c = 0;
  long s = 0;
  ZPoly n;
  ZPoly d = ZPoly::constant(1);

  bool is_zero() const { return sgn(c) == 0; }
  RationalFunc reduce() const;
};

bool frac_equal(const Frac& a, const Frac& b);

// The value of a polynomial atom under a complete binding.
LaurentPoly evaluate_atom(const MPoly& p, const Binding& b);

// Canonical value; a denominator that evaluates to zero raises
// IdenticallyZeroDenominator.
RationalFunc evaluate(const Expr& e, const Binding& b);
// Same value without any gcd work.
Frac evaluate_frac(const Expr& e, const Binding& b);
// Remembers the latest value of every subexpression together with the
// bindings of the variables it mentions.  Consecutive grid points that differ
// only in inner variables reuse everything built from the outer ones.  The
// expressions must outlive the cache; one cache per thread.
class EvalCache {
 public:
  EvalCache();
  ~EvalCache();
  EvalCache(const EvalCache&) = delete;
  EvalCache& operator=(const EvalCache&) = delete;

  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

// Both sides with shared subexpressions evaluated once.
std::pair<Frac, Frac> evaluate_frac_pair(const Expr& lhs, const Expr& rhs, const Binding& b,
                                         EvalCache* cache = nullptr);

// sum_{k=0}^{K} prod_{j<=k} ratios[j-1] with a single reduction at the end.
RationalFunc cumulative_series(const std::vector<RationalFunc>& ratios);

// Atoms that occur in a denominator position anywhere in e.
std::vector<MPoly> denominator_atoms(const Expr& e);

// True when p becomes the zero polynomial after substituting the variables
// set in the (possibly partial) binding; unset variables stay symbolic.
bool vanishes_identically(const MPoly& p, const Binding& partial);

}  // namespace qsc

#endif  // QSC_FORMULA_HPP_
