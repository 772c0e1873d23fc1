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

#ifndef QSC_PADIC_HPP_
#define QSC_PADIC_HPP_

#include <cstdint>

#include "qsc/bigrational.hpp"
#include "qsc/verdict.hpp"

namespace qsc {

// An element of Z/p^k.  Division is defined for units only.
class PadicResidue {
 public:
  PadicResidue(std::uint64_t value, std::uint64_t p, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t modulus() const noexcept { return m_; }
  bool is_unit() const noexcept { return v_ % p_ != 0; }

  PadicResidue inverse() const;  // NotPAdicUnit for non-units
  PadicResidue pow(unsigned e) const;

  friend PadicResidue operator+(const PadicResidue& a, const PadicResidue& b);
  friend PadicResidue operator-(const PadicResidue& a, const PadicResidue& b);
  friend PadicResidue operator-(const PadicResidue& a);
  friend PadicResidue operator*(const PadicResidue& a, const PadicResidue& b);
  friend PadicResidue operator/(const PadicResidue& a, const PadicResidue& b) {
    return a * b.inverse();
  }
  friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
    return a.v_ == b.v_ && a.m_ == b.m_;
  }

 private:
  std::uint64_t v_, p_, m_;
};

class PadicContext {
 public:
  // p must be a prime >= 5 and p^k must fit comfortably in 64 bits;
  // 1 <= k <= 4.  negate_gamma flips the sign of every Gamma_p value
  // (fault fixture for the harness).
  explicit PadicContext(std::uint64_t p, int k = 3, bool negate_gamma = false);

  std::uint64_t p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  std::uint64_t modulus() const noexcept { return m_; }

  PadicResidue residue(const BigRational& x) const;  // NotPAdicUnit if p | denominator
  PadicResidue residue(long x) const { return residue(BigRational(x)); }

  // Morita's Gamma_p at the integer representative of x in [0, p^k).
  PadicResidue gamma(const BigRational& x) const;
  PadicResidue gamma_at(std::uint64_t r) const;

 private:
  std::uint64_t p_;
  int k_;
  std::uint64_t m_;
  bool negate_gamma_;
};

bool is_prime(std::uint64_t n);

// x (x+1) ... (x+m-1); 1 for m = 0.
BigRational rising_rational(const BigRational& x, long m);
// H_m for order 1, H_m^{(2)} for order 2.
BigRational harmonic(long m, int order);

// Sum_{k=0}^{p-1} (1/3)_k^3 / k!^3 against Gamma_p(1/3)^6 (p = 1 mod 6) or
// -(p^2/3) Gamma_p(1/3)^6 (p = 5 mod 6), modulo p^k.
Verdict check_long(const PadicContext& ctx);
// Sum_{k=0}^{p-1} (-1/3)_k^3 / k!^3 against -18 p^2 Gamma_p(2/3)^6 or
// 54 Gamma_p(2/3)^6.
Verdict check_liu(const PadicContext& ctx);

enum class Branch { kA, kB };  // kA: p = 1 mod 6, kB: p = 5 mod 6

// Truncated sums against their closed forms.
Verdict check_cor(Branch which, const PadicContext& ctx);
// Closed forms against Gamma_p(2/3)^6 multiples.
Verdict check_prop(Branch which, const PadicContext& ctx);
// Sum_{i=1}^{(p+1)/3} 1/(3i-2)^2 = (2/9) H^{(2)}_{(2p-1)/3} (mod p), p = 5 mod 6.
Verdict check_harmonic_cong(const PadicContext& ctx);
// Functional equation, reflection formula and the factorial cross-check.
Verdict check_gamma_invariants(const PadicContext& ctx);

// The left and right sides of the truncated congruences as exact rationals.
struct RationalSides {
  BigRational lhs;
  BigRational rhs;
};
RationalSides cor_sides(Branch which, std::uint64_t p);

}  // namespace qsc

#endif  // QSC_PADIC_HPP_
