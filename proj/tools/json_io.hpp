#pragma once

// JSON forms of the result types printed by the CLI. Field names are the
// documented output schema; from_json accepts exactly what to_json emits.

#include <string>

#include "ffc/criteria.hpp"
#include "ffc/survey.hpp"
#include "json.hpp"

namespace ffc {

using ordered_json = nlohmann::ordered_json;

inline void to_json(ordered_json& j, const Theorem1Witness& w) {
  j = ordered_json{{"p", w.p}, {"n", w.n}, {"q", w.q}};
}

inline void from_json(const ordered_json& j, Theorem1Witness& w) {
  w = {j.at("p").get<u64>(), j.at("n").get<u64>(), j.at("q").get<u64>()};
}

inline void to_json(ordered_json& j, const CriterionOutcome& o) {
  j = ordered_json{{"status", std::string(to_string(o.status))},
                   {"reason", std::string(to_string(o.reason))}};
  if (o.witness) {
    j["n"] = o.witness->n;
    j["q"] = o.witness->q;
  }
}

// The witness's p is the enclosing payload's "p".
inline void from_json(const ordered_json& j, CriterionOutcome& o) {
  const auto status = verdict_from_string(j.at("status").get<std::string>());
  const auto reason = reason_from_string(j.at("reason").get<std::string>());
  if (!status || !reason) throw std::invalid_argument("unknown status or reason");
  o.status = *status;
  o.reason = *reason;
  o.witness.reset();
  if (j.contains("n") && j.contains("q")) {
    o.witness = Theorem1Witness{j.at("p").get<u64>(), j.at("n").get<u64>(), j.at("q").get<u64>()};
  }
}

inline void to_json(ordered_json& j, const Condition1Report& r) {
  j = ordered_json{{"p", r.p}, {"holds", r.holds}, {"witnesses", r.witnesses}};
}

inline void from_json(const ordered_json& j, Condition1Report& r) {
  r.p = j.at("p").get<u64>();
  r.holds = j.at("holds").get<bool>();
  r.witnesses = j.value("witnesses", std::vector<u64>{});
}

inline void to_json(ordered_json& j, const SurveyRecord& r) {
  j = ordered_json{{"p", r.p}, {"verdict", std::string(to_string(r.verdict))}};
  if (r.n) j["n"] = *r.n;
  j["ms"] = r.elapsed.count();
}

inline void from_json(const ordered_json& j, SurveyRecord& r) {
  const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!verdict) throw std::invalid_argument("unknown verdict");
  r.p = j.at("p").get<u64>();
  r.verdict = *verdict;
  r.n = j.contains("n") ? std::optional<u64>(j.at("n").get<u64>()) : std::nullopt;
  r.elapsed = std::chrono::milliseconds(j.at("ms").get<std::int64_t>());
}

inline void to_json(ordered_json& j, const TableEntry& e) {
  j = ordered_json{{"p", e.p}, {"n", nullptr}};
  if (e.n) j["n"] = *e.n;
}

inline void from_json(const ordered_json& j, TableEntry& e) {
  e.p = j.at("p").get<u64>();
  const auto& n = j.at("n");
  e.n = n.is_null() ? std::nullopt : std::optional<u64>(n.get<u64>());
}

inline void to_json(ordered_json& j, const CensusTotals& t) {
  j = ordered_json{{"bound", t.bound}, {"candidates", t.candidates}, {"holds", t.holds}};
}

inline void from_json(const ordered_json& j, CensusTotals& t) {
  t = {j.at("bound").get<u64>(), j.at("candidates").get<u64>(), j.at("holds").get<u64>()};
}

inline void to_json(ordered_json& j, const QiScanTotals& t) {
  j = ordered_json{{"bound", t.bound}, {"scanned", t.scanned}, {"failures", t.failures}};
}

inline void from_json(const ordered_json& j, QiScanTotals& t) {
  t = {j.at("bound").get<u64>(), j.at("scanned").get<u64>(),
       j.at("failures").get<std::vector<u64>>()};
}

}  // namespace ffc
