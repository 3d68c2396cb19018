#include "ffc/quad_field.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace ffc {

i64 fundamental_discriminant(i64 d) {
  if (d == 0 || d == 1) {
    fail(ErrorKind::InvalidArgument, "d must not be 0 or 1");
  }
  if (!is_squarefree(d)) {
    fail(ErrorKind::NotSquarefree, std::to_string(d));
  }
  const i64 r = ((d % 4) + 4) % 4;
  return r == 1 ? d : 4 * d;
}

u64 class_number(i64 discriminant, u64 cap) {
  if (discriminant >= 0 || (((discriminant % 4) + 4) % 4 > 1)) {
    fail(ErrorKind::InvalidArgument,
         std::to_string(discriminant) + " is not a negative discriminant");
  }
  const u64 abs_d = static_cast<u64>(-discriminant);
  if (abs_d > cap) {
    fail(ErrorKind::CapExceeded, "|D| = " + std::to_string(abs_d) + " exceeds cap " +
                                     std::to_string(cap));
  }
  // Reduced forms satisfy 3a^2 <= |D|.
  u64 h = 0;
  const i64 d = discriminant;
  for (i64 a = 1; static_cast<u64>(3 * a * a) <= abs_d; ++a) {
    i64 b = -a;
    if (((b ^ d) & 1) != 0) ++b;  // b = D mod 2
    for (; b <= a; b += 2) {
      const i64 num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

const char* to_string(Splitting s) noexcept {
  switch (s) {
    case Splitting::Split: return "Split";
    case Splitting::Inert: return "Inert";
    case Splitting::Ramified: return "Ramified";
  }
  return "Unknown";
}

Splitting splitting_type(i64 discriminant, u64 q) {
  switch (kronecker(discriminant, static_cast<i64>(q))) {
    case 1: return Splitting::Split;
    case 0: return Splitting::Ramified;
    default: return Splitting::Inert;
  }
}

ImaginaryQuadraticField::ImaginaryQuadraticField(i64 d) : d_(d) {
  if (d >= 0) {
    fail(ErrorKind::NotImaginary, std::to_string(d) + " is not negative");
  }
  discriminant_ = fundamental_discriminant(d);
}

u64 ImaginaryQuadraticField::class_number() const {
  u64 h = class_number_.load(std::memory_order_acquire);
  if (h == 0) {
    h = ffc::class_number(discriminant_);
    class_number_.store(h, std::memory_order_release);
  }
  return h;
}

ImaginaryQuadraticField make_field(i64 d) { return ImaginaryQuadraticField(d); }

}  // namespace ffc
