#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genmat/modular.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>

using namespace genmat;

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 7) == 97);
  CHECK(f.mul(50, 50) == (50ull * 50ull) % 101);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(1) == 100);
  CHECK(f.mul(7, f.inv(7)) == 1);
  CHECK(f.pow(2, 100) == 1);  // Fermat
}

TEST_CASE("rational image mod p") {
  PrimeField f(97);
  auto x = f.image(Rational(1, 3));
  REQUIRE(x.has_value());
  CHECK(f.mul(*x, 3) == 1);
  auto neg = f.image(Rational(-5));
  REQUIRE(neg.has_value());
  CHECK(*neg == 92);
  // denominator divisible by p has no image
  CHECK(!f.image(Rational(1, 97)).has_value());
  CHECK(!f.image(Rational(1, 194)).has_value());
}

TEST_CASE("deterministic 31-bit prime stream") {
  CHECK(is_prime31(2147483647ull));
  CHECK(!is_prime31(2147483647ull - 2));
  CHECK(nth_prime31(0) == 2147483647ull);
  // stable regardless of call order
  std::uint64_t p5 = nth_prime31(5);
  CHECK(nth_prime31(5) == p5);
  CHECK(is_prime31(p5));
  CHECK(nth_prime31(1) == 2147483629ull);
  // distinct and descending
  for (std::size_t k = 0; k + 1 < 8; ++k) CHECK(nth_prime31(k) > nth_prime31(k + 1));
}

TEST_CASE("miller-rabin agrees with trial division below 10000") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 10000; ++n) CHECK(is_prime31(n) == slow(n));
}

TEST_CASE("crt reconstructs across primes") {
  std::uint64_t p1 = nth_prime31(0), p2 = nth_prime31(1);
  Integer target = Integer("123456789012345678");
  CrtAccumulator acc;
  acc.add(static_cast<std::uint64_t>(target % p1), p1);
  acc.add(static_cast<std::uint64_t>(target % p2), p2);
  CHECK(acc.modulus == Integer(p1) * Integer(p2));
  CHECK(acc.value == target);
}

TEST_CASE("rational reconstruction recovers small fractions") {
  std::uint64_t p1 = nth_prime31(0), p2 = nth_prime31(1);
  Rational truth(-22, 7);
  PrimeField f1(p1), f2(p2);
  CrtAccumulator acc;
  acc.add(*f1.image(truth), p1);
  acc.add(*f2.image(truth), p2);
  auto rec = rational_reconstruct(acc.value, acc.modulus);
  REQUIRE(rec.has_value());
  CHECK(*rec == truth);
  // single prime is already enough for tiny fractions
  CrtAccumulator one;
  one.add(*f1.image(Rational(3, 5)), p1);
  auto rec1 = rational_reconstruct(one.value, one.modulus);
  REQUIRE(rec1.has_value());
  CHECK(*rec1 == Rational(3, 5));
}

TEST_CASE("reconstruction is sound and complete for M = 101") {
  // bound = floor(sqrt(50)) = 7.  Brute force the representative table and
  // demand exact agreement for every residue: found fractions must match,
  // and residues without a small representative must be refused.
  const long long M = 101, B = 7;
  for (long long a = 0; a < M; ++a) {
    std::optional<Rational> truth;
    for (long long d = 1; d <= B && !truth; ++d)
      for (long long n = -B; n <= B; ++n) {
        if (std::gcd(std::abs(n), d) != 1) continue;
        if ((n - a * d) % M == 0) { truth = Rational(n, d); break; }
      }
    auto rec = rational_reconstruct(Integer(a), Integer(M));
    if (truth.has_value()) {
      REQUIRE(rec.has_value());
      CHECK(*rec == *truth);
    } else {
      CHECK(!rec.has_value());
    }
  }
}
