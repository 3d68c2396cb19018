#include "ffc/error.hpp"

namespace ffc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::OrderUnavailable: return "OrderUnavailable";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotCubefree: return "NotCubefree";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace ffc
