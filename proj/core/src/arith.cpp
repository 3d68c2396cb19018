#include "ffc/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace ffc {

Modulus::Modulus(u64 m) : m_(m) {
  if (m >= kModulusLimit) {
    fail(ErrorKind::Overflow, "modulus " + std::to_string(m) + " is not below 2^62");
  }
  if (m < 2) {
    fail(ErrorKind::InvalidArgument, "modulus must be at least 2");
  }
}

u64 mod_pow(u64 a, u64 e, Modulus m) noexcept {
  u64 result = 1 % m.value();
  u64 base = a % m.value();
  while (e != 0) {
    if (e & 1) result = mod_mul(result, base, m);
    e >>= 1;
    if (e != 0) base = mod_mul(base, base, m);
  }
  return result;
}

u64 mod_inv(u64 a, Modulus m) {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  __int128 r0 = m.value(), r1 = a % m.value();
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 quot = r0 / r1;
    r0 -= quot * r1;
    std::swap(r0, r1);
    s0 -= quot * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    fail(ErrorKind::NotInvertible,
         std::to_string(a) + " mod " + std::to_string(m.value()));
  }
  if (s0 < 0) s0 += m.value();
  return static_cast<u64>(s0);
}

u64 reduce(i64 a, Modulus m) noexcept {
  const i64 r = static_cast<i64>(static_cast<__int128>(a) % static_cast<i64>(m.value()));
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m.value()) : r);
}

Montgomery::Montgomery(u64 odd_modulus) : m_(odd_modulus) {
  if (odd_modulus >= kModulusLimit) {
    fail(ErrorKind::Overflow, "Montgomery modulus is not below 2^62");
  }
  if (odd_modulus < 3 || odd_modulus % 2 == 0) {
    fail(ErrorKind::InvalidArgument, "Montgomery modulus must be odd and at least 3");
  }
  // Newton iteration: each step doubles the number of correct low bits.
  u64 inv = odd_modulus;
  for (int i = 0; i < 5; ++i) inv *= 2 - odd_modulus * inv;
  neg_inv_ = ~inv + 1;
  r1_ = static_cast<u64>((static_cast<u128>(1) << 64) % m_);
}

u64 Montgomery::pow(u64 a, u64 e) const noexcept {
  u64 result = r1_;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e != 0) a = mul(a, a);
  }
  return result;
}

namespace {

bool miller_rabin_round(const Montgomery& mont, u64 d, int s, u64 base) {
  const u64 n = mont.modulus();
  base %= n;
  if (base == 0) return true;
  const u64 one = mont.one();
  const u64 minus_one = n - one;
  u64 x = mont.pow(mont.to_mont(base), d);
  if (x == one || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == one) return false;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n >= kModulusLimit) {
    fail(ErrorKind::Overflow, "primality is only decided below 2^62");
  }
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  if (n < 41 * 41) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's seven bases: deterministic for every n < 2^64.
  static constexpr std::array<u64, 7> kBases = {
      2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  const Montgomery mont(n);
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](u64 b) { return miller_rabin_round(mont, d, s, b); });
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Factor out powers of two using (a|2) = 0 for even a, else +-1 by a mod 8.
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    const i64 a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Now n is odd and positive: Jacobi symbol with a reduced mod n.
  i64 top = a % n;
  if (top < 0) top += n;
  i64 bottom = n;
  while (top != 0) {
    while ((top & 1) == 0) {
      top >>= 1;
      const i64 r = bottom % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(top, bottom);
    if (top % 4 == 3 && bottom % 4 == 3) result = -result;
    top %= bottom;
  }
  return bottom == 1 ? result : 0;
}

std::vector<u64> prime_factors(u64 n, u64 known_prime) {
  std::vector<u64> factors;
  if (n < 2) return factors;
  if (known_prime > 1 && n % known_prime == 0) {
    factors.push_back(known_prime);
    while (n % known_prime == 0) n /= known_prime;
  }
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    factors.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) factors.push_back(n);
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}

u64 primitive_root(u64 q, u64 known_prime_factor) {
  if (q == 2) return 1;
  const Modulus m(q);
  const auto factors = prime_factors(q - 1, known_prime_factor);
  for (u64 g = 2; g < q; ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](u64 ell) {
      return mod_pow(g, (q - 1) / ell, m) != 1;
    });
    if (generates) return g;
  }
  fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
}

u64 element_of_order(u64 q, u64 n, u64 known_prime_factor) {
  if (n == 0 || q < 2 || (q - 1) % n != 0) {
    fail(ErrorKind::OrderUnavailable,
         std::to_string(n) + " does not divide " + std::to_string(q) + " - 1");
  }
  if (n == 1) return 1;
  const u64 g = primitive_root(q, known_prime_factor);
  return mod_pow(g, (q - 1) / n, Modulus(q));
}

bool is_squarefree(i64 d) {
  u64 n = d < 0 ? static_cast<u64>(-(d + 1)) + 1 : static_cast<u64>(d);
  if (n == 0) return false;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return false;
  }
  return true;
}

bool is_cubefree(i64 d) {
  u64 n = d < 0 ? static_cast<u64>(-(d + 1)) + 1 : static_cast<u64>(d);
  if (n == 0) return false;
  for (u64 f = 2; f * f <= n; ++f) {
    int exponent = 0;
    while (n % f == 0) {
      n /= f;
      ++exponent;
    }
    if (exponent >= 3) return false;
  }
  return true;
}

}  // namespace ffc
