#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ffc/checkpoint.hpp"
#include "ffc/fermat_quotient.hpp"
#include "ffc/sieve.hpp"
#include "ffc/survey.hpp"

using namespace ffc;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ffc-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

std::vector<SurveyRecord> without_timing(std::vector<SurveyRecord> records) {
  for (auto& r : records) r.elapsed = {};
  return records;
}

}  // namespace

TEST_CASE("smallest-n table") {
  const std::vector<TableEntry> expected{
      {3, 4},   {5, 8},   {7, 4},   {11, 8},  {13, 4},  {17, 8},  {19, 40}, {23, 20},
      {29, 8},  {31, 76}, {37, 4},  {41, 20}, {43, 4},  {47, 20}, {53, 20}, {59, 20},
      {61, 16}, {67, 4},  {71, 8},  {73, 4},  {79, 4},  {83, 32}, {89, 44}, {97, 4}};
  CHECK(qi_smallest_n_table(100) == expected);
  CHECK(qi_smallest_n_table(4) == std::vector<TableEntry>{{3, 4}});
  CHECK(qi_smallest_n_table(3).empty());
  // A cap below 40 leaves p = 19 without a witness.
  const auto capped = qi_smallest_n_table(20, 30);
  CHECK(capped.back() == TableEntry{19, std::nullopt});
}

TEST_CASE("Q(i) scan") {
  const auto small = qi_full_scan(10'000);
  CHECK(small.complete);
  CHECK(small.totals.failures.empty());
  CHECK(small.totals.scanned == primes_between(3, 10'000).size());
  CHECK(qi_full_scan(2).totals.failures.empty());
  CHECK(qi_full_scan(2).totals.scanned == 0);
  CHECK(kind_of([] { qi_full_scan(kQiScanMax + 1); }) == ErrorKind::CapExceeded);

  SurveyOptions capped;
  capped.n_max = 30;
  CHECK(qi_full_scan(100, capped).totals.failures == std::vector<u64>{19, 31, 83, 89});
}

TEST_CASE("condition1 census") {
  const auto small = condition1_census(150);
  CHECK(small.totals == CensusTotals{150, 18, 16});
  CHECK(condition1_census(6).totals == CensusTotals{6, 1, 1});
  CHECK(condition1_census(5).totals == CensusTotals{5, 0, 0});
  CHECK(condition1_census(150, {}, CensusMethod::Direct).totals == small.totals);
}

TEST_CASE("quotient sieve agrees with direct scan for every prime below 10^4") {
  FermatQuotientScanner scanner(10'000);
  for (u64 p : primes_between(3, 10'000)) {
    REQUIRE(scanner.condition1_report(p) == condition1_check(p));
  }
  CHECK(condition1_census(10'000).totals ==
        condition1_census(10'000, {}, CensusMethod::Direct).totals);
}

TEST_CASE("worker count does not change records or totals") {
  for (unsigned jobs : {2u, 3u, 5u}) {
    std::vector<SurveyRecord> serial, parallel;
    SurveyOptions one;
    one.on_record = [&](const SurveyRecord& r) { serial.push_back(r); };
    SurveyOptions many;
    many.jobs = jobs;
    many.on_record = [&](const SurveyRecord& r) { parallel.push_back(r); };

    CHECK(qi_full_scan(5'000, one).totals == qi_full_scan(5'000, many).totals);
    CHECK(without_timing(serial) == without_timing(parallel));
    CHECK(std::is_sorted(parallel.begin(), parallel.end(),
                         [](const auto& a, const auto& b) { return a.p < b.p; }));

    serial.clear();
    parallel.clear();
    CHECK(condition1_census(20'000, one).totals == condition1_census(20'000, many).totals);
    CHECK(without_timing(serial) == without_timing(parallel));
  }
}

TEST_CASE("survey records carry n exactly when established") {
  SurveyOptions options;
  options.on_record = [](const SurveyRecord& r) {
    REQUIRE(r.n.has_value() == (r.verdict == Verdict::Established));
  };
  qi_full_scan(2'000, options);
}

TEST_CASE("checkpoint file format") {
  TempDir dir;
  const auto path = dir.path / "run.ckpt";
  CHECK_FALSE(read_checkpoint(path).has_value());
  write_checkpoint(path, {1234, R"({"bound":150,"candidates":3,"holds":2})"});
  std::ifstream in(path);
  std::string l1, l2, l3;
  std::getline(in, l1);
  std::getline(in, l2);
  std::getline(in, l3);
  CHECK(l1 == kCheckpointHeader);
  CHECK(l2 == "1234");
  CHECK(l3 == R"({"bound":150,"candidates":3,"holds":2})");
  CHECK(read_checkpoint(path)->last_completed == 1234);
  CHECK_FALSE(fs::exists(dir.path / "run.ckpt.tmp"));

  std::ofstream(dir.path / "bad.ckpt") << "garbage\n1\n{}\n";
  CHECK(kind_of([&] { read_checkpoint(dir.path / "bad.ckpt"); }) == ErrorKind::Io);
  std::ofstream(dir.path / "short.ckpt") << kCheckpointHeader << "\n12\n";
  CHECK(kind_of([&] { read_checkpoint(dir.path / "short.ckpt"); }) == ErrorKind::Io);
  std::ofstream(dir.path / "nan.ckpt") << kCheckpointHeader << "\n12x\n{}\n";
  CHECK(kind_of([&] { read_checkpoint(dir.path / "nan.ckpt"); }) == ErrorKind::Io);
}

TEST_CASE("resuming from any checkpoint reproduces the uninterrupted result") {
  const auto reference = qi_full_scan(20'000);
  const auto census_reference = condition1_census(30'000);
  for (u64 stop : {2u, 3u, 1000u, 7919u, 15'000u, 19'997u}) {
    TempDir dir;
    SurveyOptions options;
    options.checkpoint = dir.path / "qi.ckpt";
    options.checkpoint_interval = std::chrono::milliseconds(0);
    options.stop_after = stop;
    const auto partial = qi_full_scan(20'000, options);
    CHECK_FALSE(partial.complete);
    CHECK(read_checkpoint(*options.checkpoint)->last_completed == stop);

    options.stop_after.reset();
    options.jobs = 3;
    const auto resumed = qi_full_scan(20'000, options);
    CHECK(resumed.complete);
    CHECK(resumed.totals == reference.totals);
    CHECK(serialize(resumed.totals) == serialize(reference.totals));

    options.checkpoint = dir.path / "census.ckpt";
    options.stop_after = stop;
    options.jobs = 1;
    condition1_census(30'000, options);
    options.stop_after.reset();
    const auto census_resumed = condition1_census(30'000, options);
    CHECK(serialize(census_resumed.totals) == serialize(census_reference.totals));
  }
}

TEST_CASE("a resumed run only emits the remaining records") {
  TempDir dir;
  SurveyOptions options;
  options.checkpoint = dir.path / "c.ckpt";
  options.stop_after = 500;
  std::vector<u64> seen;
  options.on_record = [&](const SurveyRecord& r) { seen.push_back(r.p); };
  condition1_census(1'000, options);
  CHECK(seen.back() <= 500);
  const std::size_t first_part = seen.size();
  options.stop_after.reset();
  condition1_census(1'000, options);
  CHECK(seen.size() == condition1_census(1'000).totals.candidates);
  CHECK(seen[first_part] > 500);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("checkpoint errors surface") {
  TempDir dir;
  SurveyOptions options;
  options.checkpoint = dir.path / "missing-dir" / "x.ckpt";
  CHECK(kind_of([&] { condition1_census(200, options); }) == ErrorKind::Io);

  options.checkpoint = dir.path / "other.ckpt";
  condition1_census(200, options);
  CHECK(kind_of([&] { condition1_census(300, options); }) == ErrorKind::Io);
  CHECK(kind_of([&] { qi_full_scan(200, options); }) == ErrorKind::Io);
}

TEST_CASE("totals serialization round-trips") {
  const CensusTotals c{1'000'000, 39265, 33316};
  CHECK(serialize(c) == R"({"bound":1000000,"candidates":39265,"holds":33316})");
  CHECK(parse_census_totals(serialize(c)) == c);
  const QiScanTotals q{100, 24, {19, 31}};
  CHECK(parse_qi_totals(serialize(q)) == q);
  CHECK(kind_of([] { parse_census_totals("{}"); }) == ErrorKind::Io);
}
