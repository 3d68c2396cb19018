#pragma once

// Machine-word modular arithmetic. Every modulus is below 2^62, so the
// product of two residues always fits in an unsigned 128-bit intermediate.

#include <cstdint>
#include <vector>

#include "ffc/error.hpp"

namespace ffc {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kModulusLimit = u64{1} << 62;

class Modulus {
 public:
  /// Throws Overflow for m >= 2^62 and InvalidArgument for m < 2.
  explicit Modulus(u64 m);

  constexpr u64 value() const noexcept { return m_; }
  constexpr operator u64() const noexcept { return m_; }

 private:
  u64 m_;
};

// Residue operations; arguments must already lie in [0, m).
inline u64 mod_add(u64 a, u64 b, Modulus m) noexcept {
  const u64 s = a + b;
  return s >= m.value() ? s - m.value() : s;
}

inline u64 mod_sub(u64 a, u64 b, Modulus m) noexcept {
  return a >= b ? a - b : a + m.value() - b;
}

inline u64 mod_mul(u64 a, u64 b, Modulus m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m.value());
}

u64 mod_pow(u64 a, u64 e, Modulus m) noexcept;

/// Throws NotInvertible when gcd(a, m) != 1.
u64 mod_inv(u64 a, Modulus m);

/// Least non-negative residue of a signed integer.
u64 reduce(i64 a, Modulus m) noexcept;

/// Deterministic Miller-Rabin over the full range below 2^62.
bool is_prime(u64 n);

/// Kronecker symbol (a|n), including the conventions for even and negative n.
int kronecker(i64 a, i64 n);

/// Distinct prime factors of n in ascending order, by trial division.
/// A known prime factor may be passed as a hint; it is divided out first,
/// which keeps the trial division bounded by the cofactor.
std::vector<u64> prime_factors(u64 n, u64 known_prime = 0);

/// Smallest generator of (Z/qZ)^* for prime q.
u64 primitive_root(u64 q, u64 known_prime_factor = 0);

/// An element of multiplicative order exactly n modulo the prime q.
/// Throws OrderUnavailable when n does not divide q - 1.
u64 element_of_order(u64 q, u64 n, u64 known_prime_factor = 0);

bool is_squarefree(i64 d);
bool is_cubefree(i64 d);

/// Montgomery form for an odd modulus below 2^62. Used by the hot loops
/// (census quotients, primality) where the 128-bit division dominates.
class Montgomery {
 public:
  explicit Montgomery(u64 odd_modulus);

  u64 modulus() const noexcept { return m_; }

  u64 to_mont(u64 a) const noexcept {
    return static_cast<u64>((static_cast<u128>(a) << 64) % m_);
  }
  u64 from_mont(u64 a) const noexcept { return redc(a); }

  u64 mul(u64 a, u64 b) const noexcept {
    return redc(static_cast<u128>(a) * b);
  }
  u64 one() const noexcept { return r1_; }

  /// a is in Montgomery form; the result is too.
  u64 pow(u64 a, u64 e) const noexcept;

 private:
  u64 redc(u128 t) const noexcept {
    const u64 u = static_cast<u64>(t) * neg_inv_;
    const u128 s = (t + static_cast<u128>(u) * m_) >> 64;
    const u64 r = static_cast<u64>(s);
    return r >= m_ ? r - m_ : r;
  }

  u64 m_;
  u64 neg_inv_;  // -m^{-1} mod 2^64
  u64 r1_;       // 2^64 mod m
};

}  // namespace ffc
