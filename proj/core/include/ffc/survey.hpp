#pragma once

// Batch runs over ranges of primes: the smallest-n table over Q(i), the full
// Q(i) scan, and the condition1 census.
//
// Ranges are processed in batches; inside a batch primes are spread across
// `jobs` worker threads and the records are re-emitted in ascending p, so
// output and totals never depend on scheduling. After each batch the
// completed prefix can be checkpointed and a later run resumes from it.

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffc/arith.hpp"
#include "ffc/criteria.hpp"

namespace ffc {

inline constexpr u64 kQiScanMax = 100'000'000;
inline constexpr u64 kCensusMax = u64{1} << 31;

struct SurveyRecord {
  u64 p = 0;
  Verdict verdict = Verdict::NotEstablished;
  std::optional<u64> n;  // theorem1 surveys: present iff Established
  std::chrono::milliseconds elapsed{0};
  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct TableEntry {
  u64 p = 0;
  std::optional<u64> n;  // absent: no witness under the search cap
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct CensusTotals {
  u64 bound = 0;
  u64 candidates = 0;  // odd primes p = 2 mod 3 with p < bound
  u64 holds = 0;       // those satisfying condition1
  friend bool operator==(const CensusTotals&, const CensusTotals&) = default;
};

struct QiScanTotals {
  u64 bound = 0;
  u64 scanned = 0;
  std::vector<u64> failures;  // primes with no witness, ascending
  friend bool operator==(const QiScanTotals&, const QiScanTotals&) = default;
};

struct SurveyOptions {
  std::optional<std::filesystem::path> checkpoint;
  std::chrono::milliseconds checkpoint_interval{10'000};
  unsigned jobs = 1;
  std::optional<u64> n_max;
  /// Called in ascending p for every record produced by this run.
  std::function<void(const SurveyRecord&)> on_record;
  /// Stop (and checkpoint) once every prime <= stop_after is processed.
  std::optional<u64> stop_after;
};

template <class Totals>
struct SurveyResult {
  Totals totals;
  bool complete = true;
};

/// (p, smallest n) for every odd prime p < p_max over Q(i).
std::vector<TableEntry> qi_smallest_n_table(u64 p_max, std::optional<u64> n_max = std::nullopt);

/// Every odd prime p <= p_bound for which the theorem1 search over Q(i)
/// finds no witness. Throws CapExceeded above kQiScanMax.
SurveyResult<QiScanTotals> qi_full_scan(u64 p_bound, const SurveyOptions& options = {});

enum class CensusMethod { QuotientSieve, Direct };

SurveyResult<CensusTotals> condition1_census(u64 bound, const SurveyOptions& options = {},
                                             CensusMethod method = CensusMethod::QuotientSieve);

// One-line JSON forms, used for checkpoints and the CLI totals line.
std::string serialize(const CensusTotals& totals);
std::string serialize(const QiScanTotals& totals);
CensusTotals parse_census_totals(const std::string& text);
QiScanTotals parse_qi_totals(const std::string& text);

}  // namespace ffc
