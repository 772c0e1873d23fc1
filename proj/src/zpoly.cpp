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

#include "qsc/zpoly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;
// Below this many coefficients in the shorter operand the schoolbook product
// wins over packing into big integers.
constexpr std::size_t kKroneckerThreshold = 10;

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

mpz_srcptr roinit(mpz_ptr z, const mp_limb_t* limbs, std::size_t len) {
  while (len > 0 && limbs[len - 1] == 0) --len;
  return mpz_roinit_n(z, limbs, static_cast<mp_size_t>(len));
}

// Evaluates a at 2^(limbs_per_slot * kLimbBits).  Each |coefficient| must fit
// in limbs_per_slot limbs.
BigInt pack(const ZPoly& a, std::size_t limbs_per_slot) {
  const std::size_t total = a.size() * limbs_per_slot;
  std::vector<mp_limb_t> pos(total, 0);
  std::vector<mp_limb_t> neg;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_srcptr c = a[i].get_mpz_t();
    const int s = mpz_sgn(c);
    if (s == 0) continue;
    const std::size_t n = mpz_size(c);
    const mp_limb_t* src = mpz_limbs_read(c);
    if (s > 0) {
      std::copy(src, src + n, pos.begin() + i * limbs_per_slot);
    } else {
      if (neg.empty()) neg.assign(total, 0);
      std::copy(src, src + n, neg.begin() + i * limbs_per_slot);
    }
  }
  mpz_t view;
  BigInt out(roinit(view, pos.data(), total));
  if (!neg.empty()) {
    mpz_t nview;
    mpz_sub(out.get_mpz_t(), out.get_mpz_t(), roinit(nview, neg.data(), total));
  }
  return out;
}

// Inverse of pack with balanced digits in (-2^(w-1), 2^(w-1)].
std::vector<BigInt> unpack(const BigInt& v, std::size_t limbs_per_slot,
                           std::size_t count) {
  std::vector<BigInt> out(count);
  mpz_srcptr z = v.get_mpz_t();
  const bool negative = mpz_sgn(z) < 0;
  const std::size_t size = mpz_size(z);
  const mp_limb_t* d = mpz_limbs_read(z);
  BigInt half, full;
  mpz_setbit(half.get_mpz_t(), limbs_per_slot * kLimbBits - 1);
  mpz_setbit(full.get_mpz_t(), limbs_per_slot * kLimbBits);
  bool carry = false;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t lo = i * limbs_per_slot;
    const std::size_t len = lo < size ? std::min(limbs_per_slot, size - lo) : 0;
    mpz_t slot;
    BigInt& o = out[i];
    mpz_set(o.get_mpz_t(), roinit(slot, len ? d + lo : d, len));
    if (carry) o += 1;
    if (o >= half) {
      o -= full;
      carry = true;
    } else {
      carry = false;
    }
  }
  if (negative) {
    for (auto& c : out) c = -c;
  }
  return out;
}

u32 pow_mod(u64 b, u64 e, u32 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

void trim(std::vector<u32>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_monic(std::vector<u32>& a, u32 p) {
  const u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = static_cast<u32>(c * inv % p);
}

// a <- a mod b, b monic.
void rem_monic(std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const u64 c = a.back();
    if (c != 0) {
      const u64 f = p - c;
      const std::size_t off = a.size() - 1 - db;
      for (std::size_t j = 0; j < db; ++j) {
        a[off + j] = static_cast<u32>((a[off + j] + f * b[j]) % p);
      }
    }
    a.pop_back();
  }
  trim(a);
}

std::vector<BigInt> symmetric(const std::vector<BigInt>& h, const BigInt& m) {
  BigInt half = m / 2;
  std::vector<BigInt> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    out[i] = h[i] > half ? h[i] - m : h[i];
  }
  return out;
}

}  // namespace

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

ZPoly ZPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t ZPoly::max_bits() const {
  std::size_t b = 0;
  for (const auto& c : c_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

BigInt ZPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(lc()) < 0) g = -g;
  if (g == 1) return *this;
  return divexact(g);
}

std::size_t ZPoly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && sgn(c_[k]) == 0) ++k;
  return k == c_.size() ? 0 : k;
}

ZPoly ZPoly::shift_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  return ZPoly(std::vector<BigInt>(c_.begin() + static_cast<long>(k), c_.end()));
}

ZPoly ZPoly::shift_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  std::vector<BigInt> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return ZPoly(std::move(v));
}

ZPoly ZPoly::spread(std::size_t s) const {
  if (s == 1 || is_zero()) return *this;
  std::vector<BigInt> v((c_.size() - 1) * s + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::reversed() const {
  std::vector<BigInt> v(c_.rbegin(), c_.rend());
  return ZPoly(std::move(v));
}

BigRational ZPoly::eval(const BigRational& x) const {
  if (is_zero()) return 0;
  if (x.get_den() == 1) {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.get_num() + *it;
    return BigRational(acc);
  }
  // Homogenized Horner: sum c_i num^i den^(deg-i), then divide by den^deg.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0, dpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * dpow;
    dpow *= den;
  }
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), den.get_mpz_t(), c_.size() - 1);
  BigRational r(acc, denom);
  r.canonicalize();
  return r;
}

ZPoly& ZPoly::operator*=(const BigInt& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

ZPoly ZPoly::divexact(const BigInt& k) const {
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
  }
  return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  const ZPoly& longer = a.size() >= b.size() ? a : b;
  const ZPoly& shorter = a.size() >= b.size() ? b : a;
  std::vector<BigInt> v(longer.c_);
  for (std::size_t i = 0; i < shorter.size(); ++i) v[i] += shorter.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a) {
  std::vector<BigInt> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) {
    return detail::mul_schoolbook(a, b);
  }
  return detail::mul_kronecker(a, b);
}

ZPoly square(const ZPoly& a) { return a * a; }

ZPoly product(std::vector<ZPoly> polys) {
  if (polys.empty()) return ZPoly::constant(1);
  while (polys.size() > 1) {
    std::vector<ZPoly> next;
    next.reserve((polys.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < polys.size(); i += 2) next.push_back(polys[i] * polys[i + 1]);
    if (polys.size() % 2) next.push_back(std::move(polys.back()));
    polys = std::move(next);
  }
  return std::move(polys[0]);
}

ZPoly power(const ZPoly& a, unsigned e) {
  ZPoly result = ZPoly::constant(1);
  ZPoly base = a;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = square(base);
  }
  return result;
}

namespace detail {

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(v));
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t bits =
      a.max_bits() + b.max_bits() + bit_length(std::min(a.size(), b.size())) + 2;
  const std::size_t limbs = (bits + kLimbBits - 1) / kLimbBits;
  BigInt pa = pack(a, limbs);
  BigInt prod;
  if (&a == &b) {
    prod = pa * pa;
  } else {
    prod = pa * pack(b, limbs);
  }
  return ZPoly(unpack(prod, limbs, a.size() + b.size() - 1));
}

std::optional<ZPoly> exact_quotient_classical(const ZPoly& a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> r(a.coeffs());
  std::vector<BigInt> q(a.size() - db);
  const BigInt& lcb = b.lc();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = r[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lcb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (sgn(r[j]) != 0) return std::nullopt;
  }
  return ZPoly(std::move(q));
}

std::uint32_t nth_gcd_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u32> primes;
  static std::vector<u32> small;
  std::lock_guard<std::mutex> lock(mu);
  if (small.empty()) {
    const u32 limit = 46341;
    std::vector<bool> sieve(limit + 1, true);
    for (u32 k = 2; k <= limit; ++k) {
      if (!sieve[k]) continue;
      small.push_back(k);
      for (u64 m = u64{k} * k; m <= limit; m += k) sieve[m] = false;
    }
  }
  u32 candidate = primes.empty() ? 2147483647u : primes.back() - 2;
  while (primes.size() <= i) {
    bool prime = true;
    for (u32 s : small) {
      if (u64{s} * s > candidate) break;
      if (candidate % s == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

std::vector<std::uint32_t> reduce_mod(const ZPoly& a, std::uint32_t p) {
  std::vector<u32> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<u32>(mpz_fdiv_ui(a[i].get_mpz_t(), p));
  }
  trim(out);
  return out;
}

std::vector<std::uint32_t> gcd_mod(std::vector<std::uint32_t> a,
                                   std::vector<std::uint32_t> b,
                                   std::uint32_t p) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    make_monic(b, p);
    rem_monic(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) make_monic(a, p);
  return a;
}

}  // namespace detail

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroPoly, "exact quotient by zero polynomial");
  }
  if (a.is_zero()) return ZPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  if (b.size() == 1) {
    for (const auto& c : a.coeffs()) {
      if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
    }
    return a.divexact(b[0]);
  }
  if (!mpz_divisible_p(a.lc().get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
  const std::size_t qlen = a.size() - b.size() + 1;
  if (std::min(qlen, b.size()) < kKroneckerThreshold) {
    return detail::exact_quotient_classical(a, b);
  }
  std::size_t bits = std::max(a.max_bits(), b.max_bits()) + bit_length(a.size()) + 64;
  for (int attempt = 0; attempt < 3; ++attempt, bits *= 2) {
    const std::size_t limbs = (bits + kLimbBits - 1) / kLimbBits;
    BigInt pa = pack(a, limbs);
    BigInt pb = pack(b, limbs);
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    // b | a in Z[x] forces b(2^w) | a(2^w) in Z.
    if (sgn(rem) != 0) return std::nullopt;
    ZPoly q(unpack(quot, limbs, qlen));
    if (q.size() == qlen && q * b == a) return q;
  }
  return detail::exact_quotient_classical(a, b);
}

ZPoly remainder_monic(const ZPoly& a, const ZPoly& m) {
  if (m.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroPoly, "remainder by zero polynomial");
  }
  if (m.lc() != 1) throw std::invalid_argument("remainder_monic: divisor not monic");
  const std::size_t dm = m.size() - 1;
  std::vector<BigInt> r(a.coeffs());
  for (std::size_t i = r.size(); i-- > dm;) {
    if (sgn(r[i]) == 0) continue;
    BigInt top = r[i];
    const std::size_t off = i - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      mpz_submul(r[off + j].get_mpz_t(), top.get_mpz_t(), m[j].get_mpz_t());
    }
  }
  if (r.size() > dm) r.resize(dm);
  return ZPoly(std::move(r));
}

GcdResult gcd_cofactors(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return {ZPoly(), ZPoly(), ZPoly()};
  if (a.is_zero()) return {b.primitive_part(), ZPoly(), ZPoly::constant(1)};
  if (b.is_zero()) return {a.primitive_part(), ZPoly::constant(1), ZPoly()};

  const std::size_t va = a.low_order();
  const std::size_t vb = b.low_order();
  const std::size_t v = std::min(va, vb);
  ZPoly pa = a.shift_down(va).primitive_part();
  ZPoly pb = b.shift_down(vb).primitive_part();
  auto finish = [&](const ZPoly& g, const ZPoly& ca, const ZPoly& cb) {
    return GcdResult{g.shift_up(v), ca.shift_up(va - v), cb.shift_up(vb - v)};
  };
  const ZPoly one = ZPoly::constant(1);
  if (pa.degree() == 0 || pb.degree() == 0) return finish(one, pa, pb);

  const bool swapped = pa.degree() < pb.degree();
  const ZPoly& big = swapped ? pb : pa;
  const ZPoly& small = swapped ? pa : pb;
  auto finish_ordered = [&](const ZPoly& g, const ZPoly& cbig, const ZPoly& csmall) {
    return swapped ? finish(g, csmall, cbig) : finish(g, cbig, csmall);
  };

  BigInt gamma;
  mpz_gcd(gamma.get_mpz_t(), big.lc().get_mpz_t(), small.lc().get_mpz_t());

  long bound = small.degree() + 1;
  std::vector<BigInt> lifted;
  BigInt modulus;
  std::vector<BigInt> previous;
  bool have_previous = false;
  for (std::size_t i = 0;; ++i) {
    if (i > 20000) throw std::runtime_error("modular gcd failed to converge");
    const u32 p = detail::nth_gcd_prime(i);
    if (mpz_fdiv_ui(big.lc().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(small.lc().get_mpz_t(), p) == 0) {
      continue;
    }
    std::vector<u32> g = detail::gcd_mod(detail::reduce_mod(big, p),
                                         detail::reduce_mod(small, p), p);
    const long dg = static_cast<long>(g.size()) - 1;
    if (dg == 0) return finish_ordered(one, big, small);
    if (dg > bound) continue;  // unlucky prime
    const u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = static_cast<u32>(c * gm % p);
    if (dg < bound) {
      bound = dg;
      lifted.assign(g.size(), BigInt());
      for (std::size_t k = 0; k < g.size(); ++k) lifted[k] = static_cast<unsigned long>(g[k]);
      modulus = p;
      have_previous = false;
      if (dg == small.degree()) {
        if (auto q = exact_quotient(big, small)) return finish_ordered(small, *q, one);
      }
      continue;
    }
    const u64 inv = inv_mod(static_cast<u32>(mpz_fdiv_ui(modulus.get_mpz_t(), p)), p);
    for (std::size_t k = 0; k < lifted.size(); ++k) {
      const u64 h = mpz_fdiv_ui(lifted[k].get_mpz_t(), p);
      const u64 t = (g[k] + p - h) % p * inv % p;
      mpz_addmul_ui(lifted[k].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    }
    modulus *= p;
    std::vector<BigInt> sym = symmetric(lifted, modulus);
    if (have_previous && sym == previous) {
      ZPoly candidate = ZPoly(sym).primitive_part();
      if (auto qb = exact_quotient(big, candidate)) {
        if (auto qs = exact_quotient(small, candidate)) {
          return finish_ordered(candidate, *qb, *qs);
        }
      }
    }
    previous = std::move(sym);
    have_previous = true;
  }
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) { return gcd_cofactors(a, b).gcd; }

}  // namespace qsc
