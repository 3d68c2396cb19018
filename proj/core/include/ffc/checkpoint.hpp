#pragma once

// Plain-text checkpoint for long surveys:
//
//   line 1: format header "ffc-checkpoint 1"
//   line 2: last fully processed prime (decimal)
//   line 3: serialized running totals (one-line JSON)
//
// Writes go to "<path>.tmp" first and are renamed over the target, so a
// reader only ever sees a complete file.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ffc/arith.hpp"

namespace ffc {

inline constexpr std::string_view kCheckpointHeader = "ffc-checkpoint 1";

struct Checkpoint {
  u64 last_completed = 0;
  std::string totals;
  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// nullopt when the file does not exist; Io error when it exists but is malformed.
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path);

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);

}  // namespace ffc
