#pragma once

// Sieved evaluation of condition1 through Fermat quotients.
//
// With q_p(a) = (a^(p-1) - 1) / p mod p we have a^p = a (1 + p q_p(a)) mod p^2,
// so 1 + a^p = (1 + a)^p mod p^2 reduces to
//
//   a q_p(a) = (a + 1) q_p(a + 1)   (mod p).
//
// q_p is additive, q_p(xy) = q_p(x) + q_p(y) mod p, so one exponentiation per
// prime a is enough; composite a come from a smallest-prime-factor table.

#include <cstdint>
#include <memory>
#include <vector>

#include "ffc/arith.hpp"
#include "ffc/criteria.hpp"

namespace ffc {

/// (a^(p-1) - 1) / p mod p, by direct exponentiation mod p^2. p odd prime, p ∤ a.
u64 fermat_quotient(u64 a, u64 p);

class FermatQuotientScanner {
 public:
  /// Handles every prime p <= max_p (max_p < 2^31).
  explicit FermatQuotientScanner(u64 max_p);

  /// Shares the smallest-prime-factor table; used to give each worker its
  /// own scratch space without rebuilding the table.
  FermatQuotientScanner(const FermatQuotientScanner& other);
  FermatQuotientScanner& operator=(const FermatQuotientScanner&) = delete;

  u64 max_p() const noexcept { return max_p_; }

  bool condition1_holds(u64 p);
  Condition1Report condition1_report(u64 p);

 private:
  template <class OnViolation>
  void scan(u64 p, OnViolation&& on_violation);

  u64 max_p_;
  std::shared_ptr<const std::vector<std::uint32_t>> spf_;
  std::vector<std::uint32_t> quotient_;
};

}  // namespace ffc
