#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffc {

enum class ErrorKind {
  InvalidArgument,
  NotInvertible,
  OrderUnavailable,
  NotSquarefree,
  NotCubefree,
  NotImaginary,
  CapExceeded,
  Overflow,
  Unsupported,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Capability errors are the ones a correct caller can still hit: the input
/// is well-formed but beyond what the library computes (word range, caps,
/// unsupported field shapes).
constexpr bool is_capability_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::CapExceeded || kind == ErrorKind::Overflow ||
         kind == ErrorKind::Unsupported;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ffc
