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

#ifndef QSC_RATIONAL_FUNC_HPP_
#define QSC_RATIONAL_FUNC_HPP_

#include <string>
#include <string_view>

#include "qsc/bigrational.hpp"
#include "qsc/laurent_poly.hpp"
#include "qsc/zpoly.hpp"

namespace qsc {

// Rational function in q over the rationals, always held in the canonical
// form  content * q^shift * N(q) / D(q)  where N and D are primitive integer
// polynomials with positive leading coefficients, nonzero constant terms and
// gcd(N, D) = 1.  Zero is content 0 with N = D = 1.
//
// The public view matches the usual convention: num() carries the content
// and the q-power, den() is monic with min_exp 0.
class RationalFunc {
 public:
  RationalFunc();
  RationalFunc(const BigRational& c);  // NOLINT: implicit by design
  RationalFunc(long c) : RationalFunc(BigRational(c)) {}  // NOLINT
  explicit RationalFunc(const LaurentPoly& p);

  static RationalFunc q_power(long e);
  static RationalFunc normalize(const LaurentPoly& num, const LaurentPoly& den);
  // scale * q^shift * num / den for arbitrary integer polynomials; one gcd.
  static RationalFunc from_fraction(const ZPoly& num, const ZPoly& den,
                                    const BigRational& scale = 1, long shift = 0);

  bool is_zero() const noexcept { return sgn(content_) == 0; }
  LaurentPoly num() const;
  LaurentPoly den() const;

  const BigRational& content() const noexcept { return content_; }
  long shift() const noexcept { return shift_; }
  const ZPoly& num_poly() const noexcept { return num_; }
  const ZPoly& den_poly() const noexcept { return den_; }

  // Throws PoleAtPoint when the denominator vanishes at x.
  BigRational eval(const BigRational& x) const;
  // r(q^s) for s != 0.
  RationalFunc subst_power(long s) const;
  RationalFunc pow(long e) const;
  RationalFunc inverse() const;

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator-(const RationalFunc& a);
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.content_ == b.content_ && a.shift_ == b.shift_ && a.num_ == b.num_ &&
           a.den_ == b.den_;
  }

  RationalFunc& operator+=(const RationalFunc& b) { return *this = *this + b; }
  RationalFunc& operator-=(const RationalFunc& b) { return *this = *this - b; }
  RationalFunc& operator*=(const RationalFunc& b) { return *this = *this * b; }
  RationalFunc& operator/=(const RationalFunc& b) { return *this = *this / b; }

  // {"num":[...],"den":[...]} using the LaurentPoly term format.
  std::string to_text() const;
  static RationalFunc parse(std::string_view text);

 private:
  RationalFunc(BigRational content, long shift, ZPoly num, ZPoly den)
      : content_(std::move(content)), shift_(shift), num_(std::move(num)), den_(std::move(den)) {}

  BigRational content_;
  long shift_ = 0;
  ZPoly num_;
  ZPoly den_;
};

}  // namespace qsc

#endif  // QSC_RATIONAL_FUNC_HPP_
