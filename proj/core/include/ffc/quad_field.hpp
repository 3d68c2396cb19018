#pragma once

#include <atomic>

#include "ffc/arith.hpp"

namespace ffc {

inline constexpr u64 kDefaultDiscriminantCap = 100'000'000;

/// Discriminant of Q(sqrt(d)) for squarefree d not in {0, 1}: d when
/// d = 1 mod 4, otherwise 4d.
i64 fundamental_discriminant(i64 d);

/// Number of reduced primitive positive-definite forms (a, b, c) with
/// b^2 - 4ac = D. Throws CapExceeded when |D| > cap.
u64 class_number(i64 discriminant, u64 cap = kDefaultDiscriminantCap);

enum class Splitting { Split, Inert, Ramified };

const char* to_string(Splitting s) noexcept;

/// Decomposition of the rational prime q in the quadratic field of
/// discriminant D, read off the Kronecker symbol (D|q).
Splitting splitting_type(i64 discriminant, u64 q);

/// Q(sqrt(d)) for squarefree d < 0. The class number is computed on first
/// use and cached; concurrent first calls are safe and agree.
class ImaginaryQuadraticField {
 public:
  /// Throws NotImaginary for d >= 0 and NotSquarefree for d with a square factor.
  explicit ImaginaryQuadraticField(i64 d);

  ImaginaryQuadraticField(const ImaginaryQuadraticField& other)
      : d_(other.d_), discriminant_(other.discriminant_),
        class_number_(other.class_number_.load(std::memory_order_acquire)) {}
  ImaginaryQuadraticField& operator=(const ImaginaryQuadraticField& other) {
    d_ = other.d_;
    discriminant_ = other.discriminant_;
    class_number_.store(other.class_number_.load(std::memory_order_acquire),
                        std::memory_order_release);
    return *this;
  }

  i64 d() const noexcept { return d_; }
  i64 discriminant() const noexcept { return discriminant_; }
  u64 class_number() const;

  Splitting splitting_type(u64 q) const { return ffc::splitting_type(discriminant_, q); }

 private:
  i64 d_;
  i64 discriminant_;
  mutable std::atomic<u64> class_number_{0};  // 0 = not yet computed
};

ImaginaryQuadraticField make_field(i64 d);

inline Splitting splitting_type(const ImaginaryQuadraticField& field, u64 q) {
  return field.splitting_type(q);
}

}  // namespace ffc
