#include <algorithm>

#include "doctest.h"
#include "ffc/sieve.hpp"
#include "oracles.hpp"

using namespace ffc;

TEST_CASE("primes_up_to small bounds") {
  CHECK(primes_up_to(10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(2) == std::vector<u64>{2});
}

TEST_CASE("prime count to 10^6") {
  const auto primes = primes_up_to(1'000'000);
  CHECK(primes.size() == 78498);
  CHECK(primes == oracle::eratosthenes(1'000'000));
}

TEST_CASE("segment size does not change the output") {
  const auto reference = oracle::eratosthenes(50'000);
  for (std::size_t seg : {64u, 100u, 1000u, 4096u, 65536u}) {
    CHECK(primes_up_to(50'000, seg) == reference);
  }
}

TEST_CASE("primes_between and streaming") {
  const auto all = oracle::eratosthenes(20'000);
  for (u64 lo : {0u, 2u, 3u, 100u, 7919u, 19'997u}) {
    std::vector<u64> expected;
    std::copy_if(all.begin(), all.end(), std::back_inserter(expected), [&](u64 p) { return p >= lo; });
    CHECK(primes_between(lo, 20'000, 128) == expected);
  }
  CHECK(primes_between(24, 28).empty());
  CHECK(primes_between(30, 20).empty());

  PrimeStream stream(1'000'000, 1'001'000, 256);
  std::size_t count = 0;
  for (auto chunk = stream.next(); !chunk.empty(); chunk = stream.next()) {
    CHECK(std::is_sorted(chunk.begin(), chunk.end()));
    count += chunk.size();
  }
  CHECK(count == primes_between(1'000'000, 1'001'000).size());
}

TEST_CASE("smallest prime factors") {
  const auto spf = smallest_prime_factors(1000);
  for (std::uint32_t k = 2; k <= 1000; ++k) {
    const std::uint32_t s = spf[k];
    REQUIRE(k % s == 0);
    REQUIRE(oracle::trial_division_prime(s));
    for (std::uint32_t d = 2; d < s; ++d) REQUIRE(k % d != 0);
  }
}
