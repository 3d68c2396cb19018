#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ffc/arith.hpp"

namespace ffc {

inline constexpr std::size_t kDefaultSegment = std::size_t{1} << 16;

/// Streams the primes of [lo, hi] one segment at a time. Memory stays at
/// O(sqrt(hi) + segment) regardless of the range length.
class PrimeStream {
 public:
  PrimeStream(u64 lo, u64 hi, std::size_t segment = kDefaultSegment);

  /// Primes of the next segment in ascending order; empty once exhausted.
  /// The span stays valid until the following call.
  std::span<const u64> next();

 private:
  u64 next_lo_;
  u64 hi_;
  std::size_t segment_;
  bool done_ = false;
  std::vector<u64> base_primes_;
  std::vector<std::uint8_t> composite_;
  std::vector<u64> out_;
};

std::vector<u64> primes_up_to(u64 bound, std::size_t segment = kDefaultSegment);

/// Primes in [lo, hi], ascending.
std::vector<u64> primes_between(u64 lo, u64 hi, std::size_t segment = kDefaultSegment);

/// spf[k] is the smallest prime factor of k for 2 <= k <= bound; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t bound);

}  // namespace ffc
