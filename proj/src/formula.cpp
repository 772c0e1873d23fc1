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

#include "qsc/formula.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qsc/errors.hpp"

namespace qsc {

std::string_view var_name(Var v) {
  static constexpr std::string_view kNames[kNumVars] = {"q", "a", "b", "c", "x", "y"};
  return kNames[static_cast<int>(v)];
}

// ---------------------------------------------------------------- MPoly

void MPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(),
            [](const Monomial& x, const Monomial& y) { return x.exp < y.exp; });
  std::vector<Monomial> out;
  out.reserve(t_.size());
  for (auto& m : t_) {
    if (!out.empty() && out.back().exp == m.exp) {
      out.back().coef += m.coef;
    } else {
      out.push_back(std::move(m));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Monomial& m) { return sgn(m.coef) == 0; }),
            out.end());
  t_ = std::move(out);
}

MPoly MPoly::constant(const BigRational& c) { return monomial(c, Exponents{}); }

MPoly MPoly::monomial(const BigRational& c, const Exponents& e) {
  MPoly p;
  if (sgn(c) != 0) p.t_.push_back({c, e});
  return p;
}

MPoly MPoly::var(Var v, int power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return monomial(1, e);
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].exp == Exponents{});
}

bool MPoly::is_one() const { return t_.size() == 1 && t_[0].exp == Exponents{} && t_[0].coef == 1; }

int MPoly::degree(Var v) const {
  if (t_.empty()) return 0;
  int d = t_[0].exp[static_cast<int>(v)];
  for (const auto& m : t_) d = std::max(d, m.exp[static_cast<int>(v)]);
  return d;
}

int MPoly::low(Var v) const {
  if (t_.empty()) return 0;
  int d = t_[0].exp[static_cast<int>(v)];
  for (const auto& m : t_) d = std::min(d, m.exp[static_cast<int>(v)]);
  return d;
}

MPoly MPoly::key() const {
  if (t_.empty()) return {};
  Exponents lo = t_[0].exp;
  for (const auto& m : t_) {
    for (int i = 0; i < kNumVars; ++i) lo[i] = std::min(lo[i], m.exp[i]);
  }
  MPoly k = *this;
  for (auto& m : k.t_) {
    for (int i = 0; i < kNumVars; ++i) m.exp[i] -= lo[i];
  }
  k.canonicalize();
  const BigRational lead = k.t_[0].coef;
  for (auto& m : k.t_) m.coef /= lead;
  return k;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r.t_.insert(r.t_.end(), b.t_.begin(), b.t_.end());
  r.canonicalize();
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& m : r.t_) m.coef = -m.coef;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_) {
    for (const auto& y : b.t_) {
      Monomial m{x.coef * y.coef, x.exp};
      for (int i = 0; i < kNumVars; ++i) m.exp[i] += y.exp[i];
      r.t_.push_back(std::move(m));
    }
  }
  r.canonicalize();
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i) {
    if (a.t_[i].exp != b.t_[i].exp || a.t_[i].coef != b.t_[i].coef) return false;
  }
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.t_[i].exp != b.t_[i].exp) return a.t_[i].exp < b.t_[i].exp;
    if (a.t_[i].coef != b.t_[i].coef) return a.t_[i].coef < b.t_[i].coef;
  }
  return a.t_.size() < b.t_.size();
}

std::string MPoly::to_text() const {
  if (t_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const auto& m = t_[i];
    if (i > 0) out += " + ";
    out += m.coef.get_str();
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      out += "*";
      out += var_name(static_cast<Var>(v));
      if (m.exp[v] != 1) out += "^" + std::to_string(m.exp[v]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Expr

namespace {

// Expansion of polynomial products inside sums stops at this many terms.
constexpr std::size_t kExpandLimit = 256;

NodePtr make_poly_node(const MPoly& p) {
  auto n = std::make_shared<Node>();
  n->kind = p.is_constant() ? NodeKind::kConst : NodeKind::kAtom;
  n->poly = p;
  return n;
}

MPoly monomial_power(const MPoly& m, int p) {
  if (m.is_zero()) return m;
  const Monomial& t = m.terms()[0];
  Exponents e = t.exp;
  for (auto& x : e) x *= p;
  return MPoly::monomial(pow(t.coef, p), e);
}

bool is_monomial_node(const Node& n) {
  return (n.kind == NodeKind::kConst || n.kind == NodeKind::kAtom) && n.poly.terms().size() <= 1;
}

bool same_factor(const NodePtr& x, const NodePtr& y) {
  if (x == y) return true;
  return x->kind == NodeKind::kAtom && y->kind == NodeKind::kAtom && x->poly == y->poly;
}

Expr make_product(const std::vector<std::pair<NodePtr, int>>& input) {
  MPoly mono = MPoly::constant(1);
  bool zero = false;
  std::vector<std::pair<NodePtr, int>> entries;
  std::vector<std::pair<NodePtr, int>> stack(input.rbegin(), input.rend());
  while (!stack.empty()) {
    auto [node, p] = stack.back();
    stack.pop_back();
    if (p == 0) continue;
    if (is_monomial_node(*node)) {
      if (node->poly.is_zero()) {
        if (p < 0) throw Error(ErrorCode::kDivisionByZeroRF, "zero factor in a denominator");
        zero = true;
        continue;
      }
      mono = mono * monomial_power(node->poly, p);
      continue;
    }
    if (node->kind == NodeKind::kProduct) {
      for (auto it = node->factors.rbegin(); it != node->factors.rend(); ++it) {
        stack.emplace_back(it->first, it->second * p);
      }
      continue;
    }
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const auto& e) { return same_factor(e.first, node); });
    if (it != entries.end()) {
      it->second += p;
    } else {
      entries.emplace_back(node, p);
    }
  }
  if (zero) return Expr(0L);
  entries.erase(std::remove_if(entries.begin(), entries.end(),
                               [](const auto& e) { return e.second == 0; }),
                entries.end());
  if (!mono.is_one()) {
    for (auto& e : entries) {
      if (e.second == 1 && e.first->kind == NodeKind::kAtom) {
        e.first = make_poly_node(e.first->poly * mono);
        mono = MPoly::constant(1);
        break;
      }
    }
  }
  if (entries.empty()) return Expr(mono);
  if (mono.is_one() && entries.size() == 1 && entries[0].second == 1) return Expr(entries[0].first);
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kProduct;
  if (!mono.is_one()) n->factors.emplace_back(make_poly_node(mono), 1);
  n->factors.insert(n->factors.end(), entries.begin(), entries.end());
  return Expr(NodePtr(std::move(n)));
}

// Expands a product of polynomial atoms, or returns false if the product has
// other factors or the expansion would be too large.
bool try_expand(const Node& n, MPoly& out) {
  MPoly acc = MPoly::constant(1);
  for (const auto& [f, p] : n.factors) {
    if (f->kind != NodeKind::kConst && f->kind != NodeKind::kAtom) return false;
    if (p < 0) {
      if (f->poly.terms().size() != 1) return false;
      acc = acc * monomial_power(f->poly, p);
      continue;
    }
    for (int i = 0; i < p; ++i) {
      if (acc.terms().size() * f->poly.terms().size() > kExpandLimit) return false;
      acc = acc * f->poly;
    }
  }
  out = std::move(acc);
  return true;
}

Expr make_sum(const std::vector<NodePtr>& input) {
  MPoly acc;
  std::vector<NodePtr> others;
  std::vector<NodePtr> stack(input.rbegin(), input.rend());
  while (!stack.empty()) {
    NodePtr node = stack.back();
    stack.pop_back();
    switch (node->kind) {
      case NodeKind::kConst:
      case NodeKind::kAtom:
        acc = acc + node->poly;
        break;
      case NodeKind::kSum:
        for (auto it = node->terms.rbegin(); it != node->terms.rend(); ++it) stack.push_back(*it);
        break;
      case NodeKind::kProduct: {
        MPoly expanded;
        if (try_expand(*node, expanded)) {
          acc = acc + expanded;
        } else {
          others.push_back(node);
        }
        break;
      }
      case NodeKind::kSeries:
        others.push_back(node);
        break;
    }
  }
  if (!acc.is_zero()) others.insert(others.begin(), make_poly_node(acc));
  if (others.empty()) return Expr(0L);
  if (others.size() == 1) return Expr(others[0]);
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kSum;
  n->terms = std::move(others);
  return Expr(NodePtr(std::move(n)));
}

std::string node_text(const Node& n) {
  switch (n.kind) {
    case NodeKind::kConst:
    case NodeKind::kAtom:
      return "(" + n.poly.to_text() + ")";
    case NodeKind::kProduct: {
      std::string s;
      for (const auto& [f, p] : n.factors) {
        if (!s.empty()) s += "*";
        s += node_text(*f);
        if (p != 1) s += "^" + std::to_string(p);
      }
      return s;
    }
    case NodeKind::kSum: {
      std::string s = "[";
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) s += " + ";
        s += node_text(*n.terms[i]);
      }
      return s + "]";
    }
    case NodeKind::kSeries: {
      std::string s = "series{";
      for (std::size_t i = 0; i < n.ratios.size(); ++i) {
        if (i) s += "; ";
        s += node_text(*n.ratios[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

}  // namespace

Expr::Expr() : n_(make_poly_node(MPoly())) {}
Expr::Expr(const BigRational& c) : n_(make_poly_node(MPoly::constant(c))) {}
Expr::Expr(long c) : n_(make_poly_node(MPoly::constant(c))) {}
Expr::Expr(const MPoly& p) : n_(make_poly_node(p)) {}

Expr operator+(const Expr& a, const Expr& b) { return make_sum({a.ptr(), b.ptr()}); }
Expr operator-(const Expr& a) { return make_product({{a.ptr(), 1}, {Expr(-1L).ptr(), 1}}); }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
Expr operator*(const Expr& a, const Expr& b) { return make_product({{a.ptr(), 1}, {b.ptr(), 1}}); }
Expr operator/(const Expr& a, const Expr& b) { return make_product({{a.ptr(), 1}, {b.ptr(), -1}}); }

Expr power(const Expr& base, int e) {
  if (e == 0) return Expr(1L);
  return make_product({{base.ptr(), e}});
}

Expr sum(const std::vector<Expr>& terms) {
  std::vector<NodePtr> nodes;
  nodes.reserve(terms.size());
  for (const auto& t : terms) nodes.push_back(t.ptr());
  return make_sum(nodes);
}

Expr series(const std::vector<Expr>& ratios) {
  if (ratios.empty()) return Expr(1L);
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kSeries;
  for (const auto& r : ratios) n->ratios.push_back(r.ptr());
  return Expr(NodePtr(std::move(n)));
}

std::string Expr::to_text() const { return node_text(*n_); }

Expr qpoch(const Expr& x, int step, long k) {
  if (!x.is_monomial()) throw std::invalid_argument("qpoch: argument must be a monomial");
  std::vector<std::pair<NodePtr, int>> factors;
  for (long j = 0; j < k; ++j) {
    MPoly f = MPoly::constant(1) + -(x.node().poly * MPoly::var(Var::kQ, static_cast<int>(step * j)));
    factors.emplace_back(make_poly_node(f), 1);
  }
  return make_product(factors);
}

Expr phi_series(const std::vector<Expr>& upper, const std::vector<Expr>& lower, int step,
                const Expr& z, long truncation) {
  std::vector<Expr> ratios;
  for (long k = 1; k <= truncation; ++k) {
    const int shift = static_cast<int>(step * (k - 1));
    std::vector<std::pair<NodePtr, int>> f;
    bool terminated = false;
    for (const auto& u : upper) {
      MPoly p = MPoly::constant(1) + -(u.node().poly * MPoly::var(Var::kQ, shift));
      if (p.is_zero()) terminated = true;
      f.emplace_back(make_poly_node(p), 1);
    }
    if (terminated) break;
    f.emplace_back(make_poly_node(MPoly::constant(1) + -MPoly::var(Var::kQ, static_cast<int>(step * k))), -1);
    for (const auto& l : lower) {
      f.emplace_back(make_poly_node(MPoly::constant(1) + -(l.node().poly * MPoly::var(Var::kQ, shift))), -1);
    }
    f.emplace_back(z.ptr(), 1);
    ratios.push_back(make_product(f));
  }
  return series(ratios);
}

// ---------------------------------------------------------------- evaluation

Binding& Binding::set(Var v, const BigRational& coef, long exp) {
  const int i = static_cast<int>(v);
  coef_[i] = coef;
  exp_[i] = exp;
  set_[i] = true;
  return *this;
}

LaurentPoly evaluate_atom(const MPoly& p, const Binding& b) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& m : p.terms()) {
    BigRational c = m.coef;
    long e = 0;
    for (int v = 0; v < kNumVars; ++v) {
      const int k = m.exp[v];
      if (k == 0) continue;
      if (!b.is_set(static_cast<Var>(v))) {
        throw std::logic_error("evaluate: variable " + std::string(var_name(static_cast<Var>(v))) +
                               " is unbound");
      }
      const BigRational& x = b.coef(static_cast<Var>(v));
      if (k == 1) {
        c *= x;
      } else if (x != 1) {
        c *= pow(x, k);
      }
      e += b.exp(static_cast<Var>(v)) * k;
    }
    terms.emplace_back(e, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (out > 0 && terms[out - 1].first == terms[i].first) {
      terms[out - 1].second += terms[i].second;
    } else {
      terms[out++] = std::move(terms[i]);
    }
  }
  terms.resize(out);
  return LaurentPoly::from_terms(terms);
}

namespace {

// Moves x-powers, content and sign of p into (s, c).
ZPoly strip_into(const ZPoly& p, long& s, BigRational& c, bool denominator) {
  const std::size_t v = p.low_order();
  ZPoly r = p.shift_down(v);
  BigInt k = r.content();
  if (sgn(r.lc()) < 0) k = -k;
  if (denominator) {
    s -= static_cast<long>(v);
    c /= BigRational(k);
  } else {
    s += static_cast<long>(v);
    c *= BigRational(k);
  }
  return k == 1 ? r : r.divexact(k);
}

Frac frac_one() {
  Frac f;
  f.c = 1;
  f.n = ZPoly::constant(1);
  return f;
}

Frac frac_from_laurent(const LaurentPoly& p) {
  Frac f;
  if (p.is_zero()) return f;
  auto s = p.split();
  f.c = s.scale;
  f.s = s.shift;
  f.n = std::move(s.poly);
  return f;
}

Frac frac_from_rf(const RationalFunc& r) {
  Frac f;
  if (r.is_zero()) return f;
  f.c = r.content();
  f.s = r.shift();
  f.n = r.num_poly();
  f.d = r.den_poly();
  return f;
}

Frac frac_mul(const Frac& a, const Frac& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Frac r;
  r.c = a.c * b.c;
  r.s = a.s + b.s;
  r.n = a.n * b.n;
  r.d = a.d * b.d;
  return r;
}

Frac frac_inv(const Frac& a) {
  if (a.is_zero()) throw Error(ErrorCode::kIdenticallyZeroDenominator, "denominator evaluates to zero");
  Frac r;
  r.c = 1 / a.c;
  r.s = -a.s;
  r.n = a.d;
  r.d = a.n;
  return r;
}

Frac frac_pow(const Frac& a, int p) {
  if (p < 0) return frac_pow(frac_inv(a), -p);
  if (p == 0) return frac_one();
  if (p == 1 || a.is_zero()) return a;
  Frac r;
  r.c = pow(a.c, p);
  r.s = a.s * p;
  r.n = power(a.n, static_cast<unsigned>(p));
  r.d = power(a.d, static_cast<unsigned>(p));
  return r;
}

Frac frac_add(const Frac& a, const Frac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long s = std::min(a.s, b.s);
  const bool same_den = a.d == b.d;
  const BigInt& a1 = a.c.get_num();
  const BigInt& b1 = a.c.get_den();
  const BigInt& a2 = b.c.get_num();
  const BigInt& b2 = b.c.get_den();
  ZPoly t1 = same_den ? a.n : a.n * b.d;
  ZPoly t2 = same_den ? b.n : b.n * a.d;
  t1 = t1.shift_up(static_cast<std::size_t>(a.s - s));
  t1 *= BigInt(a1 * b2);
  t2 = t2.shift_up(static_cast<std::size_t>(b.s - s));
  t2 *= BigInt(a2 * b1);
  ZPoly t = t1 + t2;
  Frac r;
  if (t.is_zero()) return r;
  r.s = s;
  r.c = BigRational(1, b1 * b2);
  r.c.canonicalize();
  r.n = strip_into(t, r.s, r.c, false);
  r.d = same_den ? a.d : a.d * b.d;
  return r;
}

}  // namespace

struct EvalCache::Impl {
  struct Entry {
    std::array<BigRational, kNumVars> coef;
    std::array<long, kNumVars> exp{};
    Frac value;
  };

  unsigned deps(const Node* n) {
    auto it = mask.find(n);
    if (it != mask.end()) return it->second;
    unsigned m = 0;
    switch (n->kind) {
      case NodeKind::kConst:
      case NodeKind::kAtom:
        for (const auto& t : n->poly.terms()) {
          for (int v = 0; v < kNumVars; ++v) {
            if (t.exp[v] != 0) m |= 1u << v;
          }
        }
        break;
      case NodeKind::kProduct:
        for (const auto& f : n->factors) m |= deps(f.first.get());
        break;
      case NodeKind::kSum:
        for (const auto& t : n->terms) m |= deps(t.get());
        break;
      case NodeKind::kSeries:
        for (const auto& r : n->ratios) m |= deps(r.get());
        break;
    }
    mask.emplace(n, m);
    return m;
  }

  const Frac* lookup(const Node* n, const Binding& b) {
    auto it = last.find(n);
    if (it == last.end()) return nullptr;
    const unsigned m = deps(n);
    for (int v = 0; v < kNumVars; ++v) {
      if (!(m & (1u << v))) continue;
      const Var var = static_cast<Var>(v);
      if (it->second.exp[v] != b.exp(var) || it->second.coef[v] != b.coef(var)) return nullptr;
    }
    return &it->second.value;
  }

  void store(const Node* n, const Binding& b, const Frac& value) {
    Entry& e = last[n];
    const unsigned m = deps(n);
    for (int v = 0; v < kNumVars; ++v) {
      if (!(m & (1u << v))) continue;
      e.coef[v] = b.coef(static_cast<Var>(v));
      e.exp[v] = b.exp(static_cast<Var>(v));
    }
    e.value = value;
  }

  std::unordered_map<const Node*, unsigned> mask;
  std::unordered_map<const Node*, Entry> last;
};

EvalCache::EvalCache() : impl_(std::make_unique<Impl>()) {}
EvalCache::~EvalCache() = default;

namespace {

class FracEvaluator {
 public:
  explicit FracEvaluator(const Binding& b, EvalCache* cache = nullptr) : b_(b), cache_(cache) {}

  Frac eval(const NodePtr& n) {
    if (cache_) {
      if (const Frac* hit = cache_->impl().lookup(n.get(), b_)) return *hit;
      Frac r = compute(*n);
      cache_->impl().store(n.get(), b_, r);
      return r;
    }
    auto it = memo_.find(n.get());
    if (it != memo_.end()) return it->second;
    Frac r = compute(*n);
    memo_.emplace(n.get(), r);
    return r;
  }

 private:
  Frac compute(const Node& n) {
    switch (n.kind) {
      case NodeKind::kConst:
      case NodeKind::kAtom:
        return frac_from_laurent(evaluate_atom(n.poly, b_));
      case NodeKind::kProduct: {
        Frac acc = frac_one();
        std::vector<ZPoly> nums, dens;
        for (const auto& [f, p] : n.factors) {
          Frac v = eval(f);
          if (v.is_zero()) {
            if (p < 0) throw Error(ErrorCode::kIdenticallyZeroDenominator, "denominator factor evaluates to zero");
            return {};
          }
          const unsigned k = static_cast<unsigned>(p < 0 ? -p : p);
          acc.c *= pow(v.c, p);
          acc.s += v.s * p;
          for (unsigned i = 0; i < k; ++i) {
            if (p > 0) {
              if (v.n.degree() > 0) nums.push_back(v.n);
              if (v.d.degree() > 0) dens.push_back(v.d);
            } else {
              if (v.d.degree() > 0) nums.push_back(v.d);
              if (v.n.degree() > 0) dens.push_back(v.n);
            }
          }
        }
        acc.n = product(std::move(nums));
        acc.d = product(std::move(dens));
        return acc;
      }
      case NodeKind::kSum: {
        Frac acc;
        for (const auto& t : n.terms) acc = frac_add(acc, eval(t));
        return acc;
      }
      case NodeKind::kSeries: {
        // A ratio that vanishes at this binding ends the series; later
        // ratios may have vanishing denominators and are never formed.
        std::vector<Frac> r;
        for (const auto& x : n.ratios) {
          r.push_back(eval(x));
          if (r.back().is_zero()) break;
        }
        Frac acc = frac_one();
        for (auto it = r.rbegin(); it != r.rend(); ++it) {
          acc = frac_add(frac_one(), frac_mul(*it, acc));
        }
        return acc;
      }
    }
    return {};
  }

  const Binding& b_;
  EvalCache* cache_;
  std::unordered_map<const Node*, Frac> memo_;
};

class RFEvaluator {
 public:
  explicit RFEvaluator(const Binding& b) : b_(b), frac_(b) {}

  RationalFunc eval(const NodePtr& n) {
    auto it = memo_.find(n.get());
    if (it != memo_.end()) return it->second;
    RationalFunc r = compute(*n);
    memo_.emplace(n.get(), r);
    return r;
  }

 private:
  RationalFunc compute(const Node& n) {
    switch (n.kind) {
      case NodeKind::kConst:
      case NodeKind::kAtom:
        return RationalFunc(evaluate_atom(n.poly, b_));
      case NodeKind::kProduct: {
        BigRational c = 1;
        long s = 0;
        std::vector<ZPoly> nums, dens;
        for (const auto& [f, p] : n.factors) {
          RationalFunc v = eval(f);
          if (v.is_zero()) {
            if (p < 0) throw Error(ErrorCode::kIdenticallyZeroDenominator, "denominator factor evaluates to zero");
            return RationalFunc();
          }
          c *= pow(v.content(), p);
          s += v.shift() * p;
          const ZPoly& up = p > 0 ? v.num_poly() : v.den_poly();
          const ZPoly& down = p > 0 ? v.den_poly() : v.num_poly();
          const unsigned k = static_cast<unsigned>(p < 0 ? -p : p);
          if (up.degree() > 0) nums.push_back(k == 1 ? up : power(up, k));
          if (down.degree() > 0) dens.push_back(k == 1 ? down : power(down, k));
        }
        return RationalFunc::from_fraction(product(std::move(nums)), product(std::move(dens)), c, s);
      }
      case NodeKind::kSum: {
        RationalFunc acc;
        for (const auto& t : n.terms) acc += eval(t);
        return acc;
      }
      case NodeKind::kSeries: {
        std::vector<RationalFunc> r;
        for (const auto& x : n.ratios) {
          r.push_back(eval(x));
          if (r.back().is_zero()) break;
        }
        return cumulative_series(r);
      }
    }
    return RationalFunc();
  }

  const Binding& b_;
  FracEvaluator frac_;
  std::unordered_map<const Node*, RationalFunc> memo_;
};

}  // namespace

RationalFunc Frac::reduce() const {
  if (is_zero()) return RationalFunc();
  return RationalFunc::from_fraction(n, d, c, s);
}

bool frac_equal(const Frac& a, const Frac& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.c != b.c || a.s != b.s) return false;
  if (a.d == b.d) return a.n == b.n;
  return a.n * b.d == b.n * a.d;
}

RationalFunc evaluate(const Expr& e, const Binding& b) { return RFEvaluator(b).eval(e.ptr()); }

RationalFunc cumulative_series(const std::vector<RationalFunc>& ratios) {
  Frac acc = frac_one();
  for (auto it = ratios.rbegin(); it != ratios.rend(); ++it) {
    acc = frac_add(frac_one(), frac_mul(frac_from_rf(*it), acc));
  }
  return acc.reduce();
}

Frac evaluate_frac(const Expr& e, const Binding& b) { return FracEvaluator(b).eval(e.ptr()); }

std::pair<Frac, Frac> evaluate_frac_pair(const Expr& lhs, const Expr& rhs, const Binding& b,
                                         EvalCache* cache) {
  FracEvaluator ev(b, cache);
  Frac l = ev.eval(lhs.ptr());
  return {std::move(l), ev.eval(rhs.ptr())};
}

std::vector<MPoly> denominator_atoms(const Expr& e) {
  std::set<MPoly> found;
  std::set<const Node*> seen;
  std::vector<const Node*> stack{e.ptr().get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    switch (n->kind) {
      case NodeKind::kProduct:
        for (const auto& [f, p] : n->factors) {
          if (p < 0 && f->kind == NodeKind::kAtom) found.insert(f->poly);
          stack.push_back(f.get());
        }
        break;
      case NodeKind::kSum:
        for (const auto& t : n->terms) stack.push_back(t.get());
        break;
      case NodeKind::kSeries:
        for (const auto& r : n->ratios) stack.push_back(r.get());
        break;
      default:
        break;
    }
  }
  return {found.begin(), found.end()};
}

bool vanishes_identically(const MPoly& p, const Binding& partial) {
  std::map<std::array<long, kNumVars + 1>, BigRational> acc;
  for (const auto& m : p.terms()) {
    BigRational c = m.coef;
    std::array<long, kNumVars + 1> key{};
    for (int v = 0; v < kNumVars; ++v) {
      const int k = m.exp[v];
      if (k == 0) continue;
      const Var var = static_cast<Var>(v);
      if (partial.is_set(var)) {
        c *= pow(partial.coef(var), k);
        key[kNumVars] += partial.exp(var) * k;
      } else {
        key[v] = k;
      }
    }
    acc[key] += c;
  }
  for (const auto& [k, c] : acc) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

}  // namespace qsc
