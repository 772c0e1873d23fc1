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

#ifndef QSC_ZPOLY_HPP_
#define QSC_ZPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/bigrational.hpp"

namespace qsc {

// Dense univariate polynomial over the integers, coefficient i at index i.
// The coefficient vector never ends in a zero; the zero polynomial is empty.
// This is the workhorse behind LaurentPoly and RationalFunc; all heavy
// arithmetic (products, exact quotients, gcds) happens here.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs);

  static ZPoly constant(const BigInt& c);
  static ZPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const BigInt& lc() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  // Bit length of the largest coefficient magnitude.
  std::size_t max_bits() const;
  // Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  // Content removed and leading coefficient made positive.
  ZPoly primitive_part() const;
  // Multiplicity of x as a factor (0 for the zero polynomial).
  std::size_t low_order() const;

  ZPoly shift_down(std::size_t k) const;  // divide by x^k; requires low_order() >= k
  ZPoly shift_up(std::size_t k) const;
  // p(x^s) for s >= 1.
  ZPoly spread(std::size_t s) const;
  // x^deg * p(1/x).
  ZPoly reversed() const;

  BigRational eval(const BigRational& x) const;

  ZPoly& operator*=(const BigInt& k);
  // Exact division of every coefficient by k.
  ZPoly divexact(const BigInt& k) const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

ZPoly square(const ZPoly& a);
// Product of all entries by a balanced tree; 1 for an empty list.
ZPoly product(std::vector<ZPoly> polys);
ZPoly power(const ZPoly& a, unsigned e);

// a / b when b divides a in Z[x]; nullopt otherwise.  b must be nonzero.
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);

// Remainder of a modulo a monic divisor m (stays in Z[x]).
ZPoly remainder_monic(const ZPoly& a, const ZPoly& m);

struct GcdResult {
  ZPoly gcd;       // primitive, positive leading coefficient
  ZPoly a_cofactor;  // a / gcd, up to the content of a
  ZPoly b_cofactor;
};

// Greatest common divisor in Z[x] up to content, by the dense modular
// algorithm (word-size primes, CRT lifting, trial division to confirm).
// Cofactors are the exact quotients of the primitive parts of the inputs.
// Both inputs zero is a caller error; one zero input returns the primitive
// part of the other.
GcdResult gcd_cofactors(const ZPoly& a, const ZPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b);

namespace detail {

// Exposed for tests: the classical O(nm) exact division that the Kronecker
// path falls back to.
std::optional<ZPoly> exact_quotient_classical(const ZPoly& a, const ZPoly& b);
ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b);
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b);

// Word-size prime field helpers used by the modular gcd.
std::uint32_t nth_gcd_prime(std::size_t i);
std::vector<std::uint32_t> reduce_mod(const ZPoly& a, std::uint32_t p);
std::vector<std::uint32_t> gcd_mod(std::vector<std::uint32_t> a,
                                   std::vector<std::uint32_t> b,
                                   std::uint32_t p);

}  // namespace detail

}  // namespace qsc

#endif  // QSC_ZPOLY_HPP_
