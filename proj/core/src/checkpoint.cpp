#include "ffc/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "ffc/error.hpp"

namespace ffc {

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    if (ec) fail(ErrorKind::Io, "cannot stat " + path.string() + ": " + ec.message());
    return std::nullopt;
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());

  std::string header, last, totals;
  if (!std::getline(in, header) || !std::getline(in, last) || !std::getline(in, totals)) {
    fail(ErrorKind::Io, path.string() + ": truncated checkpoint");
  }
  if (header != kCheckpointHeader) {
    fail(ErrorKind::Io, path.string() + ": unknown checkpoint format '" + header + "'");
  }
  Checkpoint cp;
  const auto [ptr, err] = std::from_chars(last.data(), last.data() + last.size(), cp.last_completed);
  if (err != std::errc{} || ptr != last.data() + last.size()) {
    fail(ErrorKind::Io, path.string() + ": bad last-completed line '" + last + "'");
  }
  cp.totals = std::move(totals);
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + tmp.string());
    out << kCheckpointHeader << '\n' << checkpoint.last_completed << '\n' << checkpoint.totals << '\n';
    out.flush();
    if (!out) fail(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorKind::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace ffc
