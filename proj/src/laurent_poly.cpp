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

#include "qsc/laurent_poly.hpp"

#include <algorithm>

#include "json.hpp"
#include "qsc/errors.hpp"

namespace qsc {

LaurentPoly::LaurentPoly(long min_exp, std::vector<BigRational> coeffs)
    : min_(min_exp), c_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_ += static_cast<long>(lead);
  }
  if (c_.empty()) min_ = 0;
}

LaurentPoly LaurentPoly::constant(const BigRational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigRational& c, long exponent) {
  return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::from_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return {};
  long lo = terms.front().first, hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<BigRational> v(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms) v[static_cast<std::size_t>(e - lo)] += c;
  return LaurentPoly(lo, std::move(v));
}

LaurentPoly LaurentPoly::from_zpoly(const ZPoly& p, long shift, const BigRational& scale) {
  if (p.is_zero() || sgn(scale) == 0) return {};
  std::vector<BigRational> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = scale * BigRational(p[i]);
  }
  return LaurentPoly(shift, std::move(v));
}

BigRational LaurentPoly::coeff(long exponent) const {
  if (exponent < min_ || exponent > max_exp() || is_zero()) return 0;
  return c_[static_cast<std::size_t>(exponent - min_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) out.emplace_back(min_ + static_cast<long>(i), c_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return {};
  LaurentPoly r = *this;
  r.min_ += k;
  return r;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
  if (is_zero()) return 0;
  if (sgn(x) == 0) {
    if (min_ < 0) throw Error(ErrorCode::kPoleAtPoint, "negative power of q at q = 0");
    return coeff(0);
  }
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc * pow(x, min_);
}

LaurentPoly::Split LaurentPoly::split() const {
  Split s;
  if (is_zero()) {
    s.scale = 0;
    return s;
  }
  BigInt l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) ints[i] = c_[i].get_num() * (l / c_[i].get_den());
  ZPoly p(std::move(ints));
  s.poly = p.primitive_part();
  BigInt g = p.content();
  if (sgn(p.lc()) < 0) g = -g;
  s.scale = BigRational(g, l);
  s.scale.canonicalize();
  s.shift = min_;
  return s;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.min_, b.min_);
  const long hi = std::max(a.max_exp(), b.max_exp());
  std::vector<BigRational> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[static_cast<std::size_t>(a.min_ - lo) + i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[static_cast<std::size_t>(b.min_ - lo) + i] += b.c_[i];
  return LaurentPoly(lo, std::move(v));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto sa = a.split();
  const auto sb = b.split();
  return LaurentPoly::from_zpoly(sa.poly * sb.poly, sa.shift + sb.shift, sa.scale * sb.scale);
}

LaurentPoly operator*(const BigRational& k, const LaurentPoly& a) {
  if (sgn(k) == 0) return {};
  LaurentPoly r = a;
  for (auto& c : r.c_) c *= k;
  return r;
}

std::string LaurentPoly::to_text() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms()) arr.push_back({e, qsc::to_text(c)});
  return arr.dump();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::kParse, "polynomial text must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw Error(ErrorCode::kParse, "term must be [exponent, \"num/den\"]");
    }
    terms.emplace_back(t[0].get<long>(), parse_rational(t[1].get<std::string>()));
  }
  return from_terms(terms);
}

DivRem lp_divrem(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "divrem by zero polynomial");
  if (f.is_zero()) return {};
  const long s = std::max({0L, -f.min_exp(), -g.min_exp()});
  const LaurentPoly fs = f.shifted(s);
  const LaurentPoly gs = g.shifted(s);
  const long dg = gs.max_exp();
  std::vector<BigRational> r(static_cast<std::size_t>(fs.max_exp() + 1));
  for (const auto& [e, c] : fs.terms()) r[static_cast<std::size_t>(e)] = c;
  std::vector<BigRational> gd(static_cast<std::size_t>(dg + 1));
  for (const auto& [e, c] : gs.terms()) gd[static_cast<std::size_t>(e)] = c;
  const long df = fs.max_exp();
  std::vector<BigRational> q(df >= dg ? static_cast<std::size_t>(df - dg + 1) : 0);
  for (long i = df - dg; i >= 0; --i) {
    const BigRational& top = r[static_cast<std::size_t>(i + dg)];
    if (sgn(top) == 0) continue;
    BigRational t = top / gd.back();
    q[static_cast<std::size_t>(i)] = t;
    for (long j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i + j)] -= t * gd[static_cast<std::size_t>(j)];
  }
  return {LaurentPoly(0, std::move(q)), LaurentPoly(-s, std::move(r))};
}

LaurentPoly lp_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  const ZPoly pf = f.split().poly;
  const ZPoly pg = g.split().poly;
  const ZPoly h = gcd(pf, pg);
  if (h.is_zero()) return {};
  return LaurentPoly::from_zpoly(h, 0, BigRational(1) / BigRational(h.lc()));
}

}  // namespace qsc
