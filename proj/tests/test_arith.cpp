#include <random>

#include "doctest.h"
#include "ffc/arith.hpp"
#include "ffc/sieve.hpp"
#include "oracles.hpp"

using namespace ffc;

TEST_CASE("mod_mul examples") {
  CHECK(mod_mul(3, 4, Modulus(5)) == 2);
  CHECK(mod_mul(0, 123456789, Modulus(1'000'000'007)) == 0);
  const u64 m61 = (u64{1} << 61) - 1;
  CHECK(mod_mul(u64{1} << 31, u64{1} << 31, Modulus(m61)) == oracle::mul_mod(u64{1} << 31, u64{1} << 31, m61));
  CHECK(mod_mul(u64{1} << 31, u64{1} << 31, Modulus(m61)) == 2);
}

TEST_CASE("mod_mul agrees with big-integer reduction") {
  for (u64 m = 2; m <= 300; m += 7) {
    for (u64 a = 0; a < m; a += 3) {
      for (u64 b = 0; b < m; b += 5) CHECK(mod_mul(a, b, Modulus(m)) == a * b % m);
    }
  }
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    const u64 m = 2 + rng() % (kModulusLimit - 2);
    const u64 a = rng() % m, b = rng() % m;
    REQUIRE(mod_mul(a, b, Modulus(m)) == oracle::mul_mod(a, b, m));
  }
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 10, Modulus(1000)) == 24);
  CHECK(mod_pow(3, 4, Modulus(5)) == 1);
  CHECK(mod_pow(0, 0, Modulus(7)) == 1);
  CHECK(mod_pow(5, 0, Modulus(7)) == 1);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Modulus m(2 + rng() % (kModulusLimit - 2));
    const u64 a = rng() % m;
    u64 iterated = 1 % m;
    for (u64 e = 0; e <= 12; ++e) {
      REQUIRE(mod_pow(a, e, m) == iterated);
      iterated = mod_mul(iterated, a, m);
    }
  }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(1, Modulus(13)) == 1);
  CHECK(mod_inv(3, Modulus(7)) == 5);
  try {
    mod_inv(6, Modulus(9));
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
  const Modulus big((u64{1} << 61) - 1);
  CHECK(mod_mul(mod_inv(123456789, big), 123456789, big) == 1);
}

TEST_CASE("Modulus range is enforced") {
  CHECK_THROWS_AS(Modulus{kModulusLimit}, Error);
  CHECK_THROWS_AS(Modulus{1}, Error);
  CHECK_NOTHROW(Modulus{kModulusLimit - 1});
  try {
    Modulus m(kModulusLimit + 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("Montgomery matches plain reduction") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const u64 m = (3 + rng() % (kModulusLimit - 3)) | 1;
    const Montgomery mont(m);
    const u64 a = rng() % m, b = rng() % m, e = rng() % 1000;
    REQUIRE(mont.from_mont(mont.mul(mont.to_mont(a), mont.to_mont(b))) == oracle::mul_mod(a, b, m));
    REQUIRE(mont.from_mont(mont.pow(mont.to_mont(a), e)) == oracle::pow_mod(a, e, m));
  }
}

TEST_CASE("is_prime small cases") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(561) == oracle::trial_division_prime(561));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(2147483647) == oracle::trial_division_prime(2147483647));
  CHECK(is_prime(2147483647));
  CHECK(is_prime((u64{1} << 61) - 1));
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(3215031751));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_THROWS_AS(is_prime(kModulusLimit), Error);
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
  const auto primes = oracle::eratosthenes(1'000'000);
  std::vector<bool> prime(1'000'001, false);
  for (auto p : primes) prime[p] = true;
  for (u64 n = 0; n <= 1'000'000; ++n) {
    if (is_prime(n) != prime[n]) {
      FAIL("mismatch at " << n);
    }
  }
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(12, 3) == 0);
  CHECK(kronecker(-7, 11) == 1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(1, 2) == 1);
  CHECK(kronecker(-1, -1) == -1);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
}

TEST_CASE("kronecker at odd primes is the quadratic character") {
  for (u64 q : oracle::eratosthenes(97)) {
    if (q == 2) continue;
    for (i64 a = -200; a <= 200; ++a) {
      if (a % static_cast<i64>(q) == 0) {
        REQUIRE(kronecker(a, static_cast<i64>(q)) == 0);
        continue;
      }
      REQUIRE(kronecker(a, static_cast<i64>(q)) == oracle::square_class(a, q));
    }
  }
}

TEST_CASE("kronecker is multiplicative in n") {
  for (i64 a = -30; a <= 30; ++a) {
    for (i64 m = 1; m <= 40; ++m) {
      for (i64 n = 1; n <= 40; ++n) {
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
      }
    }
  }
}

TEST_CASE("prime_factors") {
  CHECK(prime_factors(1) == std::vector<u64>{});
  CHECK(prime_factors(360) == std::vector<u64>{2, 3, 5});
  CHECK(prime_factors(40 * 19, 19) == std::vector<u64>{2, 5, 19});
  CHECK(prime_factors(2147483647) == std::vector<u64>{2147483647});
}

TEST_CASE("element_of_order") {
  CHECK(element_of_order(13, 1) == 1);
  const u64 z = element_of_order(31, 10);
  CHECK(mod_pow(z, 10, Modulus(31)) == 1);
  CHECK(mod_pow(z, 5, Modulus(31)) != 1);
  CHECK(mod_pow(z, 2, Modulus(31)) != 1);
  try {
    element_of_order(13, 5);
    FAIL("expected OrderUnavailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderUnavailable);
  }
}

TEST_CASE("element_of_order has exact order") {
  for (u64 q : oracle::eratosthenes(2000)) {
    for (u64 n = 1; n <= q - 1; ++n) {
      if ((q - 1) % n != 0) continue;
      const u64 z = element_of_order(q, n);
      const Modulus m(q);
      REQUIRE(mod_pow(z, n, m) == 1 % q);
      for (u64 ell : prime_factors(n)) REQUIRE(mod_pow(z, n / ell, m) != 1);
    }
  }
}

TEST_CASE("squarefree and cubefree") {
  CHECK(is_squarefree(-1));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(-4));
  CHECK_FALSE(is_squarefree(0));
  CHECK(is_cubefree(12));
  CHECK_FALSE(is_cubefree(-24));
  CHECK(is_cubefree(4 * 9 * 25));
}
