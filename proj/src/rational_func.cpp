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

#include "qsc/rational_func.hpp"

#include <algorithm>

#include "json.hpp"
#include "qsc/errors.hpp"

namespace qsc {

namespace {

bool is_one(const ZPoly& p) { return p.degree() == 0 && p[0] == 1; }

// Divides a and b by their gcd.  Both are primitive with positive leading
// coefficients and nonzero constant terms.
void cancel_common(ZPoly& a, ZPoly& b) {
  if (a.degree() <= 0 || b.degree() <= 0) return;
  GcdResult r = gcd_cofactors(a, b);
  if (r.gcd.degree() <= 0) return;
  a = std::move(r.a_cofactor);
  b = std::move(r.b_cofactor);
}

// Strips x-powers and content from p, folding them into shift and scale.
ZPoly strip(const ZPoly& p, long& shift, BigRational& scale, bool divide) {
  const std::size_t v = p.low_order();
  ZPoly s = p.shift_down(v);
  BigInt c = s.content();
  if (sgn(s.lc()) < 0) c = -c;
  if (divide) {
    shift -= static_cast<long>(v);
    scale /= BigRational(c);
  } else {
    shift += static_cast<long>(v);
    scale *= BigRational(c);
  }
  return c == 1 ? s : s.divexact(c);
}

}  // namespace

RationalFunc::RationalFunc() : content_(0), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}

RationalFunc::RationalFunc(const BigRational& c)
    : content_(c), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}

RationalFunc::RationalFunc(const LaurentPoly& p) : RationalFunc() {
  if (p.is_zero()) return;
  auto s = p.split();
  *this = RationalFunc(s.scale, s.shift, std::move(s.poly), ZPoly::constant(1));
}

RationalFunc RationalFunc::q_power(long e) {
  return RationalFunc(1, e, ZPoly::constant(1), ZPoly::constant(1));
}

RationalFunc RationalFunc::from_fraction(const ZPoly& num, const ZPoly& den,
                                         const BigRational& scale, long shift) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "zero denominator");
  if (num.is_zero() || sgn(scale) == 0) return RationalFunc();
  BigRational c = scale;
  ZPoly n = strip(num, shift, c, false);
  ZPoly d = strip(den, shift, c, true);
  cancel_common(n, d);
  return RationalFunc(std::move(c), shift, std::move(n), std::move(d));
}

RationalFunc RationalFunc::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "zero denominator");
  if (num.is_zero()) return RationalFunc();
  const auto sn = num.split();
  const auto sd = den.split();
  return from_fraction(sn.poly, sd.poly, sn.scale / sd.scale, sn.shift - sd.shift);
}

LaurentPoly RationalFunc::num() const {
  if (is_zero()) return {};
  return LaurentPoly::from_zpoly(num_, shift_, content_ / BigRational(den_.lc()));
}

LaurentPoly RationalFunc::den() const {
  return LaurentPoly::from_zpoly(den_, 0, BigRational(1) / BigRational(den_.lc()));
}

BigRational RationalFunc::eval(const BigRational& x) const {
  if (sgn(x) == 0) {
    if (is_zero()) return 0;
    if (shift_ < 0) throw Error(ErrorCode::kPoleAtPoint, "pole at q = 0");
    if (shift_ > 0) return 0;
    return content_ * BigRational(num_[0]) / BigRational(den_[0]);
  }
  const BigRational d = den_.eval(x);
  if (sgn(d) == 0) throw Error(ErrorCode::kPoleAtPoint, "denominator vanishes at q = " + qsc::to_text(x));
  if (is_zero()) return 0;
  return content_ * qsc::pow(x, shift_) * num_.eval(x) / d;
}

RationalFunc RationalFunc::subst_power(long s) const {
  if (s == 0) throw Error(ErrorCode::kParameterDomain, "substitution exponent must be nonzero");
  if (is_zero() || s == 1) return *this;
  const std::size_t m = static_cast<std::size_t>(std::labs(s));
  if (s > 0) return RationalFunc(content_, shift_ * s, num_.spread(m), den_.spread(m));
  // N(q^-m) = q^(-m deg N) Nrev(q^m); the reversal keeps coprimality.
  ZPoly n = num_.reversed().spread(m);
  ZPoly d = den_.reversed().spread(m);
  BigRational c = content_;
  if (sgn(n.lc()) < 0) {
    n = -n;
    c = -c;
  }
  if (sgn(d.lc()) < 0) {
    d = -d;
    c = -c;
  }
  const long sh = shift_ * s - static_cast<long>(m) * (num_.degree() - den_.degree());
  return RationalFunc(std::move(c), sh, std::move(n), std::move(d));
}

RationalFunc RationalFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZeroRF, "inverse of zero rational function");
  return RationalFunc(BigRational(1) / content_, -shift_, den_, num_);
}

RationalFunc RationalFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RationalFunc(1);
  if (is_zero()) return *this;
  const auto ue = static_cast<unsigned>(e);
  return RationalFunc(qsc::pow(content_, e), shift_ * e, power(num_, ue), power(den_, ue));
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunc();
  ZPoly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
  cancel_common(n1, d2);
  cancel_common(n2, d1);
  return RationalFunc(a.content_ * b.content_, a.shift_ + b.shift_, n1 * n2, d1 * d2);
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZeroRF, "division by zero rational function");
  return a * b.inverse();
}

RationalFunc operator-(const RationalFunc& a) {
  RationalFunc r = a;
  r.content_ = -r.content_;
  return r;
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) { return a + (-b); }

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long s = std::min(a.shift_, b.shift_);
  ZPoly g, d1, d2;
  if (a.den_ == b.den_) {
    g = a.den_;
    d1 = d2 = ZPoly::constant(1);
  } else if (is_one(a.den_) || is_one(b.den_)) {
    g = ZPoly::constant(1);
    d1 = a.den_;
    d2 = b.den_;
  } else {
    GcdResult r = gcd_cofactors(a.den_, b.den_);
    g = std::move(r.gcd);
    d1 = std::move(r.a_cofactor);
    d2 = std::move(r.b_cofactor);
  }
  const BigInt& a1 = a.content_.get_num();
  const BigInt& b1 = a.content_.get_den();
  const BigInt& a2 = b.content_.get_num();
  const BigInt& b2 = b.content_.get_den();
  ZPoly t1 = (a.num_ * d2).shift_up(static_cast<std::size_t>(a.shift_ - s));
  t1 *= BigInt(a1 * b2);
  ZPoly t2 = (b.num_ * d1).shift_up(static_cast<std::size_t>(b.shift_ - s));
  t2 *= BigInt(a2 * b1);
  ZPoly t = t1 + t2;
  if (t.is_zero()) return RationalFunc();
  long shift = s;
  BigRational c(1, b1 * b2);
  c.canonicalize();
  ZPoly n = strip(t, shift, c, false);
  // Any factor shared by the new numerator and the denominator lies in g.
  cancel_common(n, g);
  return RationalFunc(std::move(c), shift, std::move(n), d1 * d2 * g);
}

std::string RationalFunc::to_text() const {
  return "{\"num\":" + num().to_text() + ",\"den\":" + den().to_text() + "}";
}

RationalFunc RationalFunc::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::kParse, "rational function text needs \"num\" and \"den\"");
  }
  return normalize(LaurentPoly::parse(j["num"].dump()), LaurentPoly::parse(j["den"].dump()));
}

}  // namespace qsc
