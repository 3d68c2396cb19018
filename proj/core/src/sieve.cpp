#include "ffc/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace ffc {

namespace {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> simple_sieve(u64 bound) {
  std::vector<u64> primes;
  if (bound < 2) return primes;
  std::vector<std::uint8_t> composite(bound + 1, 0);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace

PrimeStream::PrimeStream(u64 lo, u64 hi, std::size_t segment)
    : next_lo_(std::max<u64>(lo, 2)), hi_(hi), segment_(std::max<std::size_t>(segment, 64)) {
  if (hi >= kModulusLimit) {
    fail(ErrorKind::Overflow, "sieve bound is not below 2^62");
  }
  done_ = next_lo_ > hi_;
  if (!done_) base_primes_ = simple_sieve(isqrt(hi_));
}

std::span<const u64> PrimeStream::next() {
  out_.clear();
  while (!done_ && out_.empty()) {
    const u64 lo = next_lo_;
    const u64 hi = std::min<u64>(hi_, lo + segment_ - 1);
    composite_.assign(hi - lo + 1, 0);
    for (u64 p : base_primes_) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) composite_[j - lo] = 1;
    }
    for (u64 k = lo; k <= hi; ++k) {
      if (!composite_[k - lo]) out_.push_back(k);
    }
    if (hi == hi_) {
      done_ = true;
    } else {
      next_lo_ = hi + 1;
    }
  }
  return out_;
}

std::vector<u64> primes_between(u64 lo, u64 hi, std::size_t segment) {
  std::vector<u64> primes;
  PrimeStream stream(lo, hi, segment);
  for (auto chunk = stream.next(); !chunk.empty(); chunk = stream.next()) {
    primes.insert(primes.end(), chunk.begin(), chunk.end());
  }
  return primes;
}

std::vector<u64> primes_up_to(u64 bound, std::size_t segment) {
  return primes_between(2, bound, segment);
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t bound) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(bound) + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

}  // namespace ffc
