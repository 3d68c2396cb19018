#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffc::cli {

enum class OutputFormat { Human, Json, Csv };

// Exit codes. The verdict of a criterion is never encoded here; it is part
// of the payload.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapability = 3;
inline constexpr int kExitIo = 4;

/// Runs one command line (args excludes the program name). Payload goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffc::cli
