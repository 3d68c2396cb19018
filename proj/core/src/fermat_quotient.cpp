#include "ffc/fermat_quotient.hpp"

#include <string>

#include "ffc/sieve.hpp"

namespace ffc {

namespace {

// x mod p for x < 2^62 with a precomputed floor(2^64 / p).
class Barrett {
 public:
  explicit Barrett(u64 p) : p_(p), factor_(static_cast<u64>((static_cast<u128>(1) << 64) / p)) {}

  u64 reduce(u64 x) const noexcept {
    const u64 quot = static_cast<u64>((static_cast<u128>(x) * factor_) >> 64);
    u64 r = x - quot * p_;
    return r >= p_ ? r - p_ : r;
  }

 private:
  u64 p_;
  u64 factor_;
};

u64 quotient_from_power(u64 power, u64 p) { return (power - 1) / p; }

}  // namespace

u64 fermat_quotient(u64 a, u64 p) {
  require_odd_prime(p);
  if (p >= (u64{1} << 31)) fail(ErrorKind::Overflow, "p^2 must stay below 2^62");
  if (a % p == 0) fail(ErrorKind::InvalidArgument, "p divides a");
  const Modulus p_squared(p * p);
  return quotient_from_power(mod_pow(a % (p * p), p - 1, p_squared), p);
}

FermatQuotientScanner::FermatQuotientScanner(u64 max_p) : max_p_(max_p) {
  if (max_p >= (u64{1} << 31)) {
    fail(ErrorKind::Overflow, "census primes must stay below 2^31");
  }
  spf_ = std::make_shared<const std::vector<std::uint32_t>>(
      smallest_prime_factors(static_cast<std::uint32_t>(max_p / 2 + 1)));
}

FermatQuotientScanner::FermatQuotientScanner(const FermatQuotientScanner& other)
    : max_p_(other.max_p_), spf_(other.spf_) {}

template <class OnViolation>
void FermatQuotientScanner::scan(u64 p, OnViolation&& on_violation) {
  require_odd_prime(p);
  if (p > max_p_) {
    fail(ErrorKind::CapExceeded,
         "scanner built for p <= " + std::to_string(max_p_) + ", got " + std::to_string(p));
  }
  const u64 last = (p - 3) / 2;
  if (last == 0) return;

  const auto& spf = *spf_;
  const Montgomery mont(p * p);
  const Barrett mod_p(p);
  quotient_.resize(last + 2);
  quotient_[1] = 0;
  u64 previous = 0;  // a q_p(a) mod p at a = 1
  for (u64 a = 2; a <= last + 1; ++a) {
    const u64 s = spf[a];
    u64 q;
    if (s == a) {
      q = quotient_from_power(mont.from_mont(mont.pow(mont.to_mont(a), p - 1)), p);
    } else {
      q = quotient_[s] + quotient_[a / s];
      if (q >= p) q -= p;
    }
    quotient_[a] = static_cast<std::uint32_t>(q);
    const u64 current = mod_p.reduce(a * q);
    if (current == previous && !on_violation(a - 1)) return;
    previous = current;
  }
}

bool FermatQuotientScanner::condition1_holds(u64 p) {
  bool holds = true;
  scan(p, [&](u64) {
    holds = false;
    return false;
  });
  return holds;
}

Condition1Report FermatQuotientScanner::condition1_report(u64 p) {
  Condition1Report report{p, true, {}};
  scan(p, [&](u64 a) {
    report.witnesses.push_back(a);
    return true;
  });
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace ffc
