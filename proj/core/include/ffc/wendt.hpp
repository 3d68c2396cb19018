#pragma once

// The Wendt resultant W_n = Res(X^n - 1, (X + 1)^n - 1).
//
// Two independent routes are kept: an exact big-integer determinant of the
// 2n x 2n Sylvester matrix, and a modular evaluation that uses the
// factorisation of X^n - 1 into linear factors modulo a prime q = 1 mod n:
//
//   W_n = prod_{u^n = 1} ((u + 1)^n - 1).
//
// The criteria only use the modular route; the exact one is a cross-check.

#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffc/arith.hpp"

namespace ffc {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr u64 kWendtExactCap = 40;

struct WendtResidue {
  u64 residue;
  u64 modulus;
  friend bool operator==(const WendtResidue&, const WendtResidue&) = default;
};

struct WendtEvaluation {
  u64 n;
  std::variant<BigInt, WendtResidue> value;

  bool exact() const noexcept { return std::holds_alternative<BigInt>(value); }
};

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

/// Sylvester matrix of two polynomials given by coefficients, highest degree first.
std::vector<std::vector<BigInt>> sylvester_matrix(const std::vector<BigInt>& f,
                                                  const std::vector<BigInt>& g);

/// Exact W_n. Throws CapExceeded for n > cap, InvalidArgument for n = 0.
BigInt wendt_exact(u64 n, u64 cap = kWendtExactCap);

/// W_n mod q for prime q with n | q - 1. Throws OrderUnavailable otherwise.
u64 wendt_mod(u64 n, u64 q, u64 known_prime_factor = 0);

/// True iff q divides W_n, for prime q with n | q - 1; stops at the first
/// root of unity u with (u + 1)^n = 1 mod q.
bool wendt_divides(u64 n, u64 q, u64 known_prime_factor = 0);

WendtEvaluation evaluate_wendt(u64 n, u64 cap = kWendtExactCap);
WendtEvaluation evaluate_wendt_mod(u64 n, u64 q);

/// (p - 1)^2 (p - 2)^2 + 6p - 2. Every prime q = np + 1 above it divides W_n.
/// Throws Overflow when the value does not fit in 64 bits.
u64 dickson_bound(u64 p);

}  // namespace ffc
