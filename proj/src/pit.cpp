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

#include "qsc/pit.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <set>
#include <unordered_map>

#include "qsc/errors.hpp"

namespace qsc {

void BoundLedger::add(Var v, const std::string& factor, long degree) {
  if (degree < 0) degree = 0;
  c_[v][factor] += degree;
}

long BoundLedger::degree_bound(Var v) const {
  auto it = c_.find(v);
  if (it == c_.end()) return 0;
  long total = 0;
  for (const auto& [f, d] : it->second) total += d;
  return total;
}

const std::map<std::string, long>& BoundLedger::contributions(Var v) const {
  static const std::map<std::string, long> kEmpty;
  auto it = c_.find(v);
  return it == c_.end() ? kEmpty : it->second;
}

nlohmann::json BoundLedger::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, m] : c_) {
    nlohmann::json vars = nlohmann::json::object();
    for (const auto& [f, d] : m) vars[f] = d;
    j[std::string(var_name(v))] = {{"bound", degree_bound(v)}, {"contributions", vars}};
  }
  return j;
}

namespace {

using KeyCount = std::map<MPoly, long>;

// Value = v^mono * prod(num keys) * P / (prod(den keys) * Q) with P, Q of
// degree at most num_opaque, den_opaque in v.
struct Shape {
  long mono = 0;
  KeyCount num, den;
  long num_opaque = 0;
  long den_opaque = 0;
};

long keys_degree(const KeyCount& k, Var v) {
  long d = 0;
  for (const auto& [key, n] : k) d += n * key.degree(v);
  return d;
}

void cancel(Shape& s) {
  for (auto it = s.num.begin(); it != s.num.end();) {
    auto jt = s.den.find(it->first);
    if (jt != s.den.end()) {
      const long m = std::min(it->second, jt->second);
      it->second -= m;
      jt->second -= m;
      if (jt->second == 0) s.den.erase(jt);
    }
    if (it->second == 0) {
      it = s.num.erase(it);
    } else {
      ++it;
    }
  }
}

void accumulate(Shape& r, const Shape& f, long p) {
  const long k = p < 0 ? -p : p;
  r.mono += p * f.mono;
  KeyCount& up = p > 0 ? r.num : r.den;
  KeyCount& down = p > 0 ? r.den : r.num;
  for (const auto& [key, n] : f.num) up[key] += k * n;
  for (const auto& [key, n] : f.den) down[key] += k * n;
  (p > 0 ? r.num_opaque : r.den_opaque) += k * f.num_opaque;
  (p > 0 ? r.den_opaque : r.num_opaque) += k * f.den_opaque;
}

Shape sum_shape(const std::vector<Shape>& terms, Var v) {
  Shape r;
  if (terms.empty()) return r;
  r.mono = terms[0].mono;
  for (const auto& t : terms) r.mono = std::min(r.mono, t.mono);
  KeyCount lcm;
  for (const auto& t : terms) {
    for (const auto& [key, n] : t.den) lcm[key] = std::max(lcm[key], n);
  }
  KeyCount common = terms[0].num;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    for (auto it = common.begin(); it != common.end();) {
      auto jt = terms[i].num.find(it->first);
      if (jt == terms[i].num.end()) {
        it = common.erase(it);
      } else {
        it->second = std::min(it->second, jt->second);
        ++it;
      }
    }
  }
  long den_opaque = 0;
  for (const auto& t : terms) den_opaque += t.den_opaque;
  long opaque = 0;
  for (const auto& t : terms) {
    KeyCount extra_num = t.num;
    for (const auto& [key, n] : common) extra_num[key] -= n;
    KeyCount missing_den = lcm;
    for (const auto& [key, n] : t.den) missing_den[key] -= n;
    const long d = (t.mono - r.mono) + keys_degree(extra_num, v) + t.num_opaque +
                   keys_degree(missing_den, v) + (den_opaque - t.den_opaque);
    opaque = std::max(opaque, d);
  }
  r.num = std::move(common);
  r.den = std::move(lcm);
  r.num_opaque = opaque;
  r.den_opaque = den_opaque;
  cancel(r);
  return r;
}

class ShapeCalc {
 public:
  explicit ShapeCalc(Var v) : v_(v) {}

  Shape of(const NodePtr& n) {
    auto it = memo_.find(n.get());
    if (it != memo_.end()) return it->second;
    Shape s = compute(*n);
    memo_.emplace(n.get(), s);
    return s;
  }

 private:
  Shape compute(const Node& n) {
    Shape s;
    switch (n.kind) {
      case NodeKind::kConst:
        return s;
      case NodeKind::kAtom: {
        s.mono = n.poly.low(v_);
        if (n.poly.degree(v_) > s.mono) s.num[n.poly.key()] = 1;
        return s;
      }
      case NodeKind::kProduct:
        for (const auto& [f, p] : n.factors) accumulate(s, of(f), p);
        cancel(s);
        return s;
      case NodeKind::kSum: {
        std::vector<Shape> terms;
        for (const auto& t : n.terms) terms.push_back(of(t));
        return sum_shape(terms, v_);
      }
      case NodeKind::kSeries: {
        std::vector<Shape> partial{Shape{}};
        for (const auto& r : n.ratios) {
          Shape next = partial.back();
          accumulate(next, of(r), 1);
          cancel(next);
          partial.push_back(std::move(next));
        }
        return sum_shape(partial, v_);
      }
    }
    return s;
  }

  Var v_;
  std::unordered_map<const Node*, Shape> memo_;
};

// Numerator and denominator degree of a node after clearing every displayed
// denominator, with no cancellation at all.
struct Literal {
  long num = 0;
  long den = 0;
};

Literal literal_sum(const std::vector<Literal>& terms) {
  Literal r;
  for (const auto& t : terms) r.den += t.den;
  for (const auto& t : terms) r.num = std::max(r.num, t.num + r.den - t.den);
  return r;
}

class LiteralCalc {
 public:
  explicit LiteralCalc(Var v) : v_(v) {}

  Literal of(const NodePtr& n) {
    auto it = memo_.find(n.get());
    if (it != memo_.end()) return it->second;
    Literal l = compute(*n);
    memo_.emplace(n.get(), l);
    return l;
  }

 private:
  Literal compute(const Node& n) {
    Literal l;
    switch (n.kind) {
      case NodeKind::kConst:
        return l;
      case NodeKind::kAtom: {
        const long lo = std::min(0, n.poly.low(v_));
        l.num = std::max(0, n.poly.degree(v_)) - lo;
        l.den = -lo;
        return l;
      }
      case NodeKind::kProduct:
        for (const auto& [f, p] : n.factors) {
          const Literal g = of(f);
          l.num += (p > 0 ? g.num : g.den) * std::labs(p);
          l.den += (p > 0 ? g.den : g.num) * std::labs(p);
        }
        return l;
      case NodeKind::kSum: {
        std::vector<Literal> terms;
        for (const auto& t : n.terms) terms.push_back(of(t));
        return literal_sum(terms);
      }
      case NodeKind::kSeries: {
        std::vector<Literal> partial{Literal{}};
        for (const auto& r : n.ratios) {
          const Literal g = of(r);
          partial.push_back({partial.back().num + g.num, partial.back().den + g.den});
        }
        return literal_sum(partial);
      }
    }
    return l;
  }

  Var v_;
  std::unordered_map<const Node*, Literal> memo_;
};

bool is_pole_error(const Error& e) {
  return e.code() == ErrorCode::kIdenticallyZeroDenominator || e.code() == ErrorCode::kPoleAtPoint ||
         e.code() == ErrorCode::kDivisionByZeroRF;
}

}  // namespace

BoundLedger identity_bounds(const Expr& lhs, const Expr& rhs, const std::vector<Var>& vars) {
  BoundLedger ledger;
  for (Var v : vars) {
    ShapeCalc calc(v);
    const Shape s = sum_shape({calc.of(lhs.ptr()), calc.of(rhs.ptr())}, v);
    for (const auto& [key, n] : s.num) {
      if (key.degree(v) > 0) ledger.add(v, "factor " + key.to_text(), n * key.degree(v));
    }
    ledger.add(v, "combined numerator", s.num_opaque);
  }
  return ledger;
}

BoundLedger literal_bounds(const Expr& lhs, const Expr& rhs, const std::vector<Var>& vars) {
  BoundLedger ledger;
  for (Var v : vars) {
    LiteralCalc calc(v);
    ledger.add(v, "literal factor degrees", literal_sum({calc.of(lhs.ptr()), calc.of(rhs.ptr())}).num);
  }
  return ledger;
}

std::vector<BigRational> generate_grid(const GridSpec& spec) {
  if (sgn(spec.stride) == 0) throw Error(ErrorCode::kParameterDomain, "grid stride must be nonzero");
  std::vector<BigRational> out;
  const std::size_t limit = 10 * spec.required_points;
  BigRational x = spec.start;
  for (std::size_t cand = 0; out.size() < spec.required_points; ++cand, x += spec.stride) {
    if (cand >= limit) {
      throw Error(ErrorCode::kGridExhausted,
                  "grid for " + spec.variable + " could not reach " +
                      std::to_string(spec.required_points) + " points");
    }
    if (std::find(spec.exclusions.begin(), spec.exclusions.end(), x) != spec.exclusions.end()) continue;
    if (spec.excluded && spec.excluded(x)) continue;
    out.push_back(x);
  }
  return out;
}

Verdict verify_on_grid(const PointBuilder& builder, std::vector<BigRational> grid) {
  std::sort(grid.begin(), grid.end());
  for (const auto& x : grid) {
    auto [l, r] = builder(x);
    if (!(l == r)) {
      return Verdict::fail("sides differ at " + to_text(x),
                           {{"point", to_text(x)}, {"difference", nlohmann::json::parse((l - r).to_text())}});
    }
  }
  return Verdict::pass("equal at every grid point", {{"points", grid.size()}});
}

namespace {

class NestedRunner {
 public:
  NestedRunner(const NestedGrid& g, const PointCheck& check) : g_(g), check_(check) {
    for (std::size_t i = 0; i < g.vars.size(); ++i) {
      need_.push_back(g.points_override ? *g.points_override : g.bounds[i] + 1 + g.margin);
    }
    point_.resize(g.vars.size());
    // An atom can only start to vanish once its last swept variable is
    // bound, so each distinct atom is tested at that level alone.
    atoms_at_.resize(g.vars.size());
    std::set<MPoly> distinct(g.pole_atoms.begin(), g.pole_atoms.end());
    for (const auto& atom : distinct) {
      for (std::size_t i = g.vars.size(); i-- > 0;) {
        if (atom.depends_on(g.vars[i].var)) {
          atoms_at_[i].push_back(atom);
          break;
        }
      }
    }
  }

  Verdict run() {
    nlohmann::json bounds = nlohmann::json::object();
    nlohmann::json points = nlohmann::json::object();
    bool certified = true;
    for (std::size_t i = 0; i < g_.vars.size(); ++i) {
      const std::string name(var_name(g_.vars[i].var));
      bounds[name] = g_.bounds[i];
      points[name] = need_[i];
      if (need_[i] < g_.bounds[i] + 1) certified = false;
    }
    if (g_.vars.empty()) {
      try {
        evaluate(g_.fixed);
      } catch (const Error& e) {
        if (!is_pole_error(e)) throw;
        throw Error(ErrorCode::kGridPole, std::string("substituted identity has a pole: ") + e.what());
      }
    } else {
      descend(0, g_.fixed);
    }
    nlohmann::json w = {{"bounds", bounds},
                        {"points", points},
                        {"evaluations", evaluations_},
                        {"poles_skipped", poles_}};
    if (failure_) {
      w["failure"] = *failure_;
      Verdict v = Verdict::fail("check failed at a grid point", w);
      v.certified = certified;
      return v;
    }
    Verdict v = Verdict::pass(certified ? "identity certified on grid" : "identity sampled on grid", w);
    v.certified = certified;
    return v;
  }

 private:
  // Returns false once a failure has been recorded.
  bool evaluate(const Binding& b) {
    ++evaluations_;
    auto w = check_(b);
    if (!w) return true;
    nlohmann::json f = {{"check", *w}};
    nlohmann::json pt = nlohmann::json::object();
    for (std::size_t i = 0; i < g_.vars.size(); ++i) {
      pt[std::string(var_name(g_.vars[i].var))] = to_text(point_[i]);
    }
    f["point"] = pt;
    failure_ = f;
    return false;
  }

  bool descend(std::size_t level, const Binding& b) {
    const GridVar& gv = g_.vars[level];
    const long need = need_[level];
    const long limit = 10 * std::max<long>(need, 1);
    long got = 0;
    BigRational x = gv.start;
    for (long cand = 0; got < need; ++cand, x += gv.stride) {
      if (cand >= limit) {
        throw Error(ErrorCode::kGridExhausted, "grid for " + std::string(var_name(gv.var)) +
                                                   " could not reach " + std::to_string(need) +
                                                   " points");
      }
      if (std::find(gv.exclusions.begin(), gv.exclusions.end(), x) != gv.exclusions.end()) continue;
      Binding nb = b;
      nb.set(gv.var, x);
      bool pole = false;
      for (const auto& atom : atoms_at_[level]) {
        if (vanishes_identically(atom, nb)) {
          pole = true;
          break;
        }
      }
      if (pole) {
        ++poles_;
        continue;
      }
      point_[level] = x;
      if (level + 1 == g_.vars.size()) {
        try {
          if (!evaluate(nb)) return false;
        } catch (const Error& e) {
          if (!is_pole_error(e)) throw;
          ++poles_;
          continue;
        }
      } else if (!descend(level + 1, nb)) {
        return false;
      }
      ++got;
    }
    return true;
  }

  const NestedGrid& g_;
  const PointCheck& check_;
  std::vector<long> need_;
  std::vector<BigRational> point_;
  std::vector<std::vector<MPoly>> atoms_at_;
  long evaluations_ = 0;
  long poles_ = 0;
  std::optional<nlohmann::json> failure_;
};

}  // namespace

Verdict run_nested(const NestedGrid& grid, const PointCheck& check) {
  if (grid.bounds.size() != grid.vars.size()) {
    throw std::invalid_argument("run_nested: one bound per swept variable required");
  }
  return NestedRunner(grid, check).run();
}

PointCheck equality_check(const Expr& lhs, const Expr& rhs) {
  auto cache = std::make_shared<EvalCache>();
  return [lhs, rhs, cache](const Binding& b) -> std::optional<nlohmann::json> {
    auto [l, r] = evaluate_frac_pair(lhs, rhs, b, cache.get());
    if (frac_equal(l, r)) return std::nullopt;
    return nlohmann::json{{"difference", nlohmann::json::parse((l.reduce() - r.reduce()).to_text())}};
  };
}

Verdict verify_identity(const Expr& lhs, const Expr& rhs, const Binding& fixed,
                        const std::vector<GridVar>& vars, long margin,
                        std::optional<long> points_override) {
  std::vector<Var> names;
  for (const auto& gv : vars) names.push_back(gv.var);
  const BoundLedger ledger = identity_bounds(lhs, rhs, names);
  NestedGrid g;
  g.fixed = fixed;
  g.vars = vars;
  for (Var v : names) g.bounds.push_back(ledger.degree_bound(v));
  g.pole_atoms = denominator_atoms(lhs);
  auto more = denominator_atoms(rhs);
  g.pole_atoms.insert(g.pole_atoms.end(), more.begin(), more.end());
  g.margin = margin;
  g.points_override = points_override;
  return run_nested(g, equality_check(lhs, rhs));
}

}  // namespace qsc
