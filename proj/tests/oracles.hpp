#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library's arithmetic kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using std::int64_t;
using std::uint64_t;

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  cpp_int r = cpp_int(a) * cpp_int(b) % cpp_int(m);
  return static_cast<uint64_t>(r);
}

inline uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
  return static_cast<uint64_t>(boost::multiprecision::powm(cpp_int(a), cpp_int(e), cpp_int(m)));
}

inline bool trial_division_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<uint64_t> eratosthenes(uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<uint64_t> primes;
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

/// For an odd prime q and a coprime to q: +1 if a is a square mod q, else -1.
inline int square_class(int64_t a, uint64_t q) {
  const int64_t r = ((a % static_cast<int64_t>(q)) + static_cast<int64_t>(q)) % static_cast<int64_t>(q);
  if (r == 0) return 0;
  for (uint64_t x = 1; x < q; ++x) {
    if (x * x % q == static_cast<uint64_t>(r)) return 1;
  }
  return -1;
}

/// Counts reduced primitive forms by scanning every (a, b) with a small and
/// both signs of b, deriving c, then testing the reduction rules.
inline uint64_t brute_force_class_number(int64_t disc) {
  const int64_t abs_d = -disc;
  uint64_t count = 0;
  for (int64_t a = 1; 3 * a * a <= abs_d; ++a) {
    for (int64_t b = -abs_d; b <= abs_d; ++b) {
      const int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const int64_t c = num / (4 * a);
      const bool reduced = std::abs(b) <= a && a <= c && (b >= 0 || (std::abs(b) != a && a != c));
      if (!reduced) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

inline bool is_fundamental_negative(int64_t disc) {
  const int64_t r = ((disc % 16) + 16) % 16;
  auto squarefree = [](int64_t n) {
    n = std::abs(n);
    for (int64_t f = 2; f * f <= n; ++f) {
      if (n % (f * f) == 0) return false;
    }
    return true;
  };
  if (r % 4 == 1) return squarefree(disc);
  if (r % 4 == 0) {
    const int64_t m = disc / 4;
    const int64_t mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

/// Laplace expansion along the first row; fine for the 8x8 matrices of n <= 4.
inline cpp_int cofactor_determinant(const std::vector<std::vector<cpp_int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  cpp_int det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<cpp_int> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const cpp_int term = m[0][col] * cofactor_determinant(minor);
    det += (col % 2 == 0) ? term : cpp_int(-term);
  }
  return det;
}

/// Sylvester matrix of X^n - 1 and (X+1)^n - 1 built from scratch.
inline std::vector<std::vector<cpp_int>> wendt_sylvester(unsigned n) {
  std::vector<cpp_int> f(n + 1, 0), g(n + 1, 0);
  f[0] = 1;
  f[n] = -1;
  for (unsigned k = 0; k <= n; ++k) {
    cpp_int c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    g[k] = c;
  }
  g[n] -= 1;
  std::vector<std::vector<cpp_int>> s(2 * n, std::vector<cpp_int>(2 * n, 0));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c <= n; ++c) {
      s[r][r + c] = f[c];
      s[n + r][r + c] = g[c];
    }
  }
  return s;
}

/// {a in [1, p-2] : 1 + a^p = (1 + a)^p mod p^2}, by big-integer powers.
inline std::set<uint64_t> condition1_violations(uint64_t p) {
  std::set<uint64_t> s;
  const cpp_int p2 = cpp_int(p) * p;
  for (uint64_t a = 1; a + 2 <= p; ++a) {
    const cpp_int lhs = cpp_int(1 + cpp_int(boost::multiprecision::powm(cpp_int(a), cpp_int(p), p2))) % p2;
    const cpp_int rhs = cpp_int(boost::multiprecision::powm(cpp_int(a + 1), cpp_int(p), p2));
    if (lhs == rhs) s.insert(a);
  }
  return s;
}

}  // namespace oracle
