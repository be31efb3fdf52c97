#pragma once

// Word-size prime arithmetic, CRT and rational reconstruction.  These only
// ever produce *candidates*; every caller must certify results exactly and
// treat a failed certification as a hard error.

#include "genmat/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace genmat {

struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { std::uint64_t s = a + b; return s >= p ? s - p : s; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  // Image of an exact rational; nullopt when the denominator vanishes mod p
  // (the caller must then pick a different prime).
  std::optional<std::uint64_t> image(const Rational& r) const {
    Integer d = den(r) % Integer(p);
    if (d == 0) return std::nullopt;
    Integer nmod = num(r) % Integer(p);
    std::uint64_t nn = static_cast<std::uint64_t>(nmod < 0 ? nmod + Integer(p) : nmod);
    return mul(nn, inv(static_cast<std::uint64_t>(d < 0 ? d + Integer(p) : d)));
  }
};

// Deterministic Miller-Rabin, exact for n < 3'215'031'751 (bases 2,3,5,7).
inline bool is_prime31(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  PrimeField f(n);
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
    std::uint64_t x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Deterministic stream of 31-bit primes (descending from 2^31 - 1).
// index k always yields the same prime, independent of call history.
inline std::uint64_t nth_prime31(std::size_t k) {
  static std::vector<std::uint64_t> cache{2147483647ULL};  // 2^31 - 1
  while (cache.size() <= k) {
    std::uint64_t cand = cache.back() - 2;
    while (!is_prime31(cand)) cand -= 2;
    cache.push_back(cand);
  }
  return cache[k];
}

// Garner-style pairwise CRT.  value is the least nonnegative residue.
struct CrtAccumulator {
  Integer modulus{1};
  Integer value{0};

  void add(std::uint64_t residue, std::uint64_t prime) {
    Integer p(prime), r(residue);
    if (modulus == 1) { modulus = p; value = r; return; }
    // x = value + modulus * t,  t = (r - value) * modulus^{-1} mod p
    Integer minv;
    {
      // extended gcd modulus^{-1} mod p via Fermat (p prime)
      PrimeField f(prime);
      Integer mm = modulus % p;
      if (mm < 0) mm += p;
      minv = Integer(f.inv(static_cast<std::uint64_t>(mm)));
    }
    Integer t = ((r - value) % p) * minv % p;
    if (t < 0) t += p;
    value += modulus * t;
    modulus *= p;
  }
};

// Wang rational reconstruction: find n/d with n ≡ a·d (mod M),
// |n|, d <= sqrt(M/2).  nullopt when no such representative exists.
inline std::optional<Rational> rational_reconstruct(const Integer& a0, const Integer& M) {
  const Integer half = M / 2;
  Integer bound = sqrt(half);
  Integer r0 = M, r1 = a0 % M;
  if (r1 < 0) r1 += M;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Integer t2 = t0 - q * t1;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  if (abs(t1) > bound) return std::nullopt;
  if (gcd(r1, abs(t1)) != 1) return std::nullopt;
  return Rational(r1, t1);  // canonicalizes sign automatically
}

}  // namespace genmat
