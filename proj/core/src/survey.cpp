#include "ffc/survey.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "ffc/checkpoint.hpp"
#include "ffc/fermat_quotient.hpp"
#include "ffc/quad_field.hpp"
#include "ffc/sieve.hpp"
#include "json.hpp"

namespace ffc {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

constexpr std::size_t kBatchPerWorker = 256;

// Evaluates `primes` with one functor per worker, writing records by index.
template <class Worker>
std::vector<SurveyRecord> evaluate_batch(const std::vector<u64>& primes,
                                         std::vector<Worker>& workers) {
  std::vector<SurveyRecord> records(primes.size());
  auto run = [&](std::size_t worker, std::exception_ptr& error) {
    try {
      for (std::size_t i = worker; i < primes.size(); i += workers.size()) {
        const auto start = Clock::now();
        records[i] = workers[worker](primes[i]);
        records[i].elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      }
    } catch (...) {
      error = std::current_exception();
    }
  };

  std::vector<std::exception_ptr> errors(workers.size());
  if (workers.size() == 1) {
    run(0, errors[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers.size());
    for (std::size_t w = 0; w < workers.size(); ++w) {
      threads.emplace_back(run, w, std::ref(errors[w]));
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

// Streams the primes of [lo, hi] accepted by `keep` through the workers in
// ascending batches. `apply` folds each record into the totals; `save`
// serializes them for the checkpoint. Returns false when stopped early.
template <class Totals, class Worker, class Keep, class Apply, class Save>
bool drive(u64 lo, u64 hi, const SurveyOptions& options, Totals& totals,
           std::vector<Worker>& workers, Keep keep, Apply apply, Save save) {
  u64 resume_from = lo;
  if (options.checkpoint) {
    if (auto cp = read_checkpoint(*options.checkpoint)) {
      totals = save.parse(cp->totals);
      resume_from = std::max(lo, cp->last_completed + 1);
    }
  }

  const u64 stop = options.stop_after ? std::min(hi, *options.stop_after) : hi;
  const std::size_t batch_size = kBatchPerWorker * workers.size();
  auto last_save = Clock::now();
  u64 last_done = resume_from > 0 ? resume_from - 1 : 0;

  auto checkpoint = [&](bool force) {
    if (!options.checkpoint) return;
    if (!force && Clock::now() - last_save < options.checkpoint_interval) return;
    write_checkpoint(*options.checkpoint, Checkpoint{last_done, save(totals)});
    last_save = Clock::now();
  };

  std::vector<u64> batch;
  auto flush = [&] {
    if (batch.empty()) return;
    for (const auto& record : evaluate_batch(batch, workers)) {
      apply(totals, record);
      if (options.on_record) options.on_record(record);
    }
    batch.clear();
  };

  if (resume_from <= stop) {
    PrimeStream stream(resume_from, stop);
    for (auto chunk = stream.next(); !chunk.empty(); chunk = stream.next()) {
      for (u64 p : chunk) {
        if (!keep(p)) continue;
        batch.push_back(p);
        if (batch.size() == batch_size) {
          const u64 through = batch.back();
          flush();
          last_done = through;
          checkpoint(false);
        }
      }
      // Everything in the segment is accounted for, kept or not.
      flush();
      last_done = chunk.back();
      checkpoint(false);
    }
  }
  last_done = std::max(last_done, stop);
  checkpoint(true);
  return stop == hi;
}

struct QiSave {
  std::string operator()(const QiScanTotals& t) const { return serialize(t); }
  QiScanTotals parse(const std::string& text) const {
    auto t = parse_qi_totals(text);
    if (t.bound != bound) {
      fail(ErrorKind::Io, "checkpoint is for bound " + std::to_string(t.bound) +
                              ", not " + std::to_string(bound));
    }
    return t;
  }
  u64 bound;
};

struct CensusSave {
  std::string operator()(const CensusTotals& t) const { return serialize(t); }
  CensusTotals parse(const std::string& text) const {
    auto t = parse_census_totals(text);
    if (t.bound != bound) {
      fail(ErrorKind::Io, "checkpoint is for bound " + std::to_string(t.bound) +
                              ", not " + std::to_string(bound));
    }
    return t;
  }
  u64 bound;
};

unsigned worker_count(const SurveyOptions& options) { return std::max(1u, options.jobs); }

}  // namespace

std::vector<TableEntry> qi_smallest_n_table(u64 p_max, std::optional<u64> n_max) {
  std::vector<TableEntry> table;
  if (p_max <= 3) return table;
  const ImaginaryQuadraticField gaussian(-1);
  for (u64 p : primes_between(3, p_max - 1)) {
    const auto witness = theorem1_search(gaussian, p, n_max);
    table.push_back({p, witness ? std::optional<u64>(witness->n) : std::nullopt});
  }
  return table;
}

SurveyResult<QiScanTotals> qi_full_scan(u64 p_bound, const SurveyOptions& options) {
  if (p_bound > kQiScanMax) {
    fail(ErrorKind::CapExceeded,
         "scan bound " + std::to_string(p_bound) + " above " + std::to_string(kQiScanMax));
  }
  const ImaginaryQuadraticField gaussian(-1);
  gaussian.class_number();

  struct Worker {
    const ImaginaryQuadraticField* field;
    std::optional<u64> n_max;
    SurveyRecord operator()(u64 p) const {
      const auto witness = theorem1_search(*field, p, n_max);
      SurveyRecord r;
      r.p = p;
      r.verdict = witness ? Verdict::Established : Verdict::NotEstablished;
      if (witness) r.n = witness->n;
      return r;
    }
  };
  std::vector<Worker> workers(worker_count(options), Worker{&gaussian, options.n_max});

  QiScanTotals totals;
  totals.bound = p_bound;
  const bool complete = drive(
      3, p_bound, options, totals, workers, [](u64) { return true; },
      [](QiScanTotals& t, const SurveyRecord& r) {
        ++t.scanned;
        if (r.verdict == Verdict::NotEstablished) t.failures.push_back(r.p);
      },
      QiSave{p_bound});
  return {std::move(totals), complete};
}

SurveyResult<CensusTotals> condition1_census(u64 bound, const SurveyOptions& options,
                                             CensusMethod method) {
  if (bound > kCensusMax) {
    fail(ErrorKind::CapExceeded,
         "census bound " + std::to_string(bound) + " above " + std::to_string(kCensusMax));
  }
  CensusTotals totals;
  totals.bound = bound;
  if (bound <= 5) return {totals, true};

  const u64 last = bound - 1;  // p < bound
  auto keep = [](u64 p) { return p % 3 == 2 && p != 2; };
  auto apply = [](CensusTotals& t, const SurveyRecord& r) {
    ++t.candidates;
    if (r.verdict == Verdict::Established) ++t.holds;
  };
  auto record_for = [](u64 p, bool holds) {
    SurveyRecord r;
    r.p = p;
    r.verdict = holds ? Verdict::Established : Verdict::NotEstablished;
    return r;
  };

  bool complete;
  if (method == CensusMethod::QuotientSieve) {
    struct Worker {
      FermatQuotientScanner scanner;
      decltype(record_for) make;
      SurveyRecord operator()(u64 p) { return make(p, scanner.condition1_holds(p)); }
    };
    const FermatQuotientScanner prototype(last);
    std::vector<Worker> workers(worker_count(options), Worker{prototype, record_for});
    complete = drive(5, last, options, totals, workers, keep, apply, CensusSave{bound});
  } else {
    struct Worker {
      decltype(record_for) make;
      SurveyRecord operator()(u64 p) const { return make(p, condition1_holds(p)); }
    };
    std::vector<Worker> workers(worker_count(options), Worker{record_for});
    complete = drive(5, last, options, totals, workers, keep, apply, CensusSave{bound});
  }
  return {totals, complete};
}

std::string serialize(const CensusTotals& totals) {
  return json{{"bound", totals.bound}, {"candidates", totals.candidates}, {"holds", totals.holds}}
      .dump();
}

std::string serialize(const QiScanTotals& totals) {
  return json{{"bound", totals.bound}, {"scanned", totals.scanned}, {"failures", totals.failures}}
      .dump();
}

CensusTotals parse_census_totals(const std::string& text) {
  try {
    const auto j = json::parse(text);
    return {j.at("bound").get<u64>(), j.at("candidates").get<u64>(), j.at("holds").get<u64>()};
  } catch (const json::exception& e) {
    fail(ErrorKind::Io, std::string("malformed census totals: ") + e.what());
  }
}

QiScanTotals parse_qi_totals(const std::string& text) {
  try {
    const auto j = json::parse(text);
    return {j.at("bound").get<u64>(), j.at("scanned").get<u64>(),
            j.at("failures").get<std::vector<u64>>()};
  } catch (const json::exception& e) {
    fail(ErrorKind::Io, std::string("malformed scan totals: ") + e.what());
  }
}

}  // namespace ffc
