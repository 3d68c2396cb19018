#include "ffc/wendt.hpp"

#include <string>
#include <utility>

namespace ffc {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix) {
  const std::size_t size = matrix.size();
  if (size == 0) return 1;
  int sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (matrix[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && matrix[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(matrix[k], matrix[swap_row]);
      sign = -sign;
    }
    const BigInt& pivot = matrix[k][k];
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        matrix[i][j] = (pivot * matrix[i][j] - matrix[i][k] * matrix[k][j]) / previous_pivot;
      }
      matrix[i][k] = 0;
    }
    previous_pivot = pivot;
  }
  BigInt det = matrix[size - 1][size - 1];
  return sign < 0 ? BigInt(-det) : det;
}

std::vector<std::vector<BigInt>> sylvester_matrix(const std::vector<BigInt>& f,
                                                  const std::vector<BigInt>& g) {
  if (f.size() < 2 || g.size() < 2) {
    fail(ErrorKind::InvalidArgument, "Sylvester matrix needs polynomials of degree >= 1");
  }
  const std::size_t deg_f = f.size() - 1;
  const std::size_t deg_g = g.size() - 1;
  const std::size_t size = deg_f + deg_g;
  std::vector<std::vector<BigInt>> rows(size, std::vector<BigInt>(size, 0));
  for (std::size_t r = 0; r < deg_g; ++r) {
    for (std::size_t c = 0; c <= deg_f; ++c) rows[r][r + c] = f[c];
  }
  for (std::size_t r = 0; r < deg_f; ++r) {
    for (std::size_t c = 0; c <= deg_g; ++c) rows[deg_g + r][r + c] = g[c];
  }
  return rows;
}

BigInt wendt_exact(u64 n, u64 cap) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n > cap) {
    fail(ErrorKind::CapExceeded,
         "exact W_n limited to n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  // X^n - 1
  std::vector<BigInt> f(n + 1, 0);
  f.front() = 1;
  f.back() = -1;
  // (X + 1)^n - 1: binomial coefficients, constant term cancels.
  std::vector<BigInt> g(n + 1, 0);
  BigInt binom = 1;
  for (u64 k = 0; k <= n; ++k) {
    g[k] = binom;  // coefficient of X^(n-k) is C(n, k)
    binom = binom * (n - k) / (k + 1);
  }
  g.back() -= 1;
  return bareiss_determinant(sylvester_matrix(f, g));
}

namespace {

void require_root_field(u64 n, u64 q) {
  if (n == 0 || q < 2 || (q - 1) % n != 0) {
    fail(ErrorKind::OrderUnavailable,
         std::to_string(n) + " does not divide " + std::to_string(q) + " - 1");
  }
}

}  // namespace

u64 wendt_mod(u64 n, u64 q, u64 known_prime_factor) {
  require_root_field(n, q);
  const Modulus m(q);
  const u64 zeta = element_of_order(q, n, known_prime_factor);
  u64 product = 1;
  u64 root = 1;
  for (u64 k = 0; k < n; ++k) {
    const u64 term = mod_sub(mod_pow(mod_add(root, 1 % q, m), n, m), 1 % q, m);
    product = mod_mul(product, term, m);
    root = mod_mul(root, zeta, m);
  }
  return product;
}

bool wendt_divides(u64 n, u64 q, u64 known_prime_factor) {
  require_root_field(n, q);
  const Modulus m(q);
  const u64 zeta = element_of_order(q, n, known_prime_factor);
  const u64 one = 1 % q;
  u64 root = 1;
  for (u64 k = 0; k < n; ++k) {
    if (mod_pow(mod_add(root, one, m), n, m) == one) return true;
    root = mod_mul(root, zeta, m);
  }
  return false;
}

WendtEvaluation evaluate_wendt(u64 n, u64 cap) { return {n, wendt_exact(n, cap)}; }

WendtEvaluation evaluate_wendt_mod(u64 n, u64 q) {
  if (!is_prime(q)) fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
  return {n, WendtResidue{wendt_mod(n, q), q}};
}

u64 dickson_bound(u64 p) {
  if (p < 3) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
  constexpr u128 kWordMax = ~u64{0};
  const u128 product = static_cast<u128>(p - 1) * (p - 2);
  const u128 bound = product <= kWordMax ? product * product + 6 * static_cast<u128>(p) - 2
                                         : kWordMax + 1;
  if (bound > kWordMax) {
    fail(ErrorKind::Overflow, "Dickson bound for p = " + std::to_string(p) + " exceeds 64 bits");
  }
  return static_cast<u64>(bound);
}

}  // namespace ffc
