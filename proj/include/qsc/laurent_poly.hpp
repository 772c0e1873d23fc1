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

#ifndef QSC_LAURENT_POLY_HPP_
#define QSC_LAURENT_POLY_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/bigrational.hpp"
#include "qsc/zpoly.hpp"

namespace qsc {

// Finitely supported Laurent polynomial in q with rational coefficients.
// Stored densely from min_exp upward; both ends are nonzero, and the zero
// polynomial has no coefficients at all.
class LaurentPoly {
 public:
  using Term = std::pair<long, BigRational>;

  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<BigRational> coeffs);

  static LaurentPoly constant(const BigRational& c);
  static LaurentPoly monomial(const BigRational& c, long exponent);
  static LaurentPoly q() { return monomial(1, 1); }
  static LaurentPoly from_terms(const std::vector<Term>& terms);
  // scale * q^shift * p
  static LaurentPoly from_zpoly(const ZPoly& p, long shift = 0,
                                const BigRational& scale = 1);

  bool is_zero() const noexcept { return c_.empty(); }
  // Both undefined (0) for the zero polynomial.
  long min_exp() const noexcept { return min_; }
  long max_exp() const noexcept { return min_ + static_cast<long>(c_.size()) - 1; }
  BigRational coeff(long exponent) const;
  const BigRational& leading() const { return c_.back(); }
  // Nonzero terms in increasing exponent order.
  std::vector<Term> terms() const;

  LaurentPoly shifted(long k) const;  // times q^k
  // Throws PoleAtPoint at x = 0 when a negative power is present.
  BigRational eval(const BigRational& x) const;

  // Splits this into scale * q^min_exp * P with P an integer polynomial of
  // nonzero constant term; P is primitive with positive leading coefficient.
  struct Split {
    BigRational scale;
    long shift = 0;
    ZPoly poly;
  };
  Split split() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const BigRational& k, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_ == b.min_ && a.c_ == b.c_;
  }

  // [[e,"n/d"],...] with increasing exponents.
  std::string to_text() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();
  long min_ = 0;
  std::vector<BigRational> c_;
};

struct DivRem {
  LaurentPoly quot;
  LaurentPoly rem;
};

// f = quot * g + rem with deg rem < deg g.  When either argument carries
// negative powers, both are multiplied by the same q^s first and rem is
// shifted back afterwards.
DivRem lp_divrem(const LaurentPoly& f, const LaurentPoly& g);

// Monic gcd of the polynomial parts (q^min_exp factored out of each).
LaurentPoly lp_gcd(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace qsc

#endif  // QSC_LAURENT_POLY_HPP_
