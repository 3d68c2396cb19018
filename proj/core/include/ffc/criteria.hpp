#pragma once

// Local-obstruction criteria for the first case of Fermat's equation
// x^p + y^p + z^p = 0 over a number field.
//
// Every check is one-sided: NotEstablished means the criterion is silent
// for this input, never that a solution exists.

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ffc/arith.hpp"
#include "ffc/quad_field.hpp"

namespace ffc {

/// q = n p + 1 is a prime split in K with (n^n - 1) W_n != 0 mod q.
struct Theorem1Witness {
  u64 p;
  u64 n;
  u64 q;
  friend bool operator==(const Theorem1Witness&, const Theorem1Witness&) = default;
};

enum class Verdict { Established, NotEstablished };

/// Why a check ended the way it did. Failures name the first hypothesis that
/// did not hold, in the order the check evaluates them.
enum class Reason {
  Witness,               // theorem1 path succeeded; witness attached
  Hypotheses,            // theorem2 path succeeded
  ClassNumberDivisible,  // p | h_K
  SixDividesN,           // W_n = 0
  QNotPrime,
  QNotSplit,
  NPowerTrivial,         // n^n = 1 mod q
  WendtDivisible,        // q | W_n
  NoCandidate,           // none of the tried exponents worked
  Exhausted,             // search ran to its cap without a witness
  Condition1Fails,
  NoDegreeOnePrime,
  RamificationTooLarge,
  ResidueDegreeNotOne,
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Reason r) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view s) noexcept;
std::optional<Reason> reason_from_string(std::string_view s) noexcept;

struct CriterionOutcome {
  Verdict status = Verdict::NotEstablished;
  Reason reason = Reason::NoCandidate;
  std::optional<Theorem1Witness> witness;

  bool established() const noexcept { return status == Verdict::Established; }
  friend bool operator==(const CriterionOutcome&, const CriterionOutcome&) = default;
};

/// Throws InvalidArgument unless p is an odd prime.
void require_odd_prime(u64 p);

/// Checks, cheapest first: 6 | n, h_K mod p, primality of q = np + 1,
/// splitting of q, n^n mod q, q | W_n. Throws Overflow if q leaves the word range.
CriterionOutcome theorem1_check(const ImaginaryQuadraticField& field, u64 p, u64 n);

inline constexpr u64 kDefaultSearchCap = u64{1} << 20;

/// Largest n the search visits: min(n_max, dickson_bound(p)).
u64 theorem1_search_cap(u64 p, std::optional<u64> n_max = std::nullopt);

/// Smallest even n <= theorem1_search_cap(p, n_max) with 6 not dividing n
/// for which theorem1_check succeeds.
std::optional<Theorem1Witness> theorem1_search(const ImaginaryQuadraticField& field, u64 p,
                                               std::optional<u64> n_max = std::nullopt);

/// The n = 2 case: W_2 = -3 and 2^2 - 1 = 3, and q = 2p + 1 >= 7 never
/// divides 9, so only h_K, primality and splitting can fail.
CriterionOutcome sophie_germain_check(const ImaginaryQuadraticField& field, u64 p);

/// Over Q(i), tries n = 4, 8, 16 in order.
CriterionOutcome corollary2_check(u64 p);

struct Condition1Report {
  u64 p = 0;
  bool holds = true;
  std::vector<u64> witnesses;  // a in [1, (p-3)/2] with 1 + a^p = (1+a)^p mod p^2
  friend bool operator==(const Condition1Report&, const Condition1Report&) = default;
};

/// Full report: scans every a in [1, (p-3)/2]. Throws Overflow for p >= 2^31.
Condition1Report condition1_check(u64 p);

/// Stops at the first violating a; agrees with condition1_check(p).holds.
bool condition1_holds(u64 p);

// Field descriptions under which a degree-one prime above p can be decided.
struct QuadraticField {
  i64 d;
};
struct PureField {
  i64 d;
  u64 n;
};
struct TotallyRamifiedField {
  u64 degree;
};
struct AssertedPrime {
  u64 e;  // ramification index
  u64 f;  // residue degree
};
using FieldHypothesis = std::variant<QuadraticField, PureField, TotallyRamifiedField, AssertedPrime>;

enum class PureFieldCase { Unramified, Cubic, CongruentExponent };

std::string_view to_string(PureFieldCase c) noexcept;

struct DegreeOnePrime {
  bool exists;
  PureFieldCase tag;
};

/// Whether Q(d^(1/n)) has a prime above p of residue degree 1 (with e <= p - 1).
/// Supported: p not dividing dn with d squarefree; n = 3 with p = 2 mod 3,
/// p >= 5 and d cubefree. Throws Unsupported outside these cases.
DegreeOnePrime pure_field_residue_degree_one(i64 d, u64 n, u64 p);

/// Established iff condition1 holds for p and F has a prime above p of
/// residue degree 1 and ramification index at most p - 1. condition1 is
/// evaluated first, so a failing p is reported even for fields whose
/// degree-one question is unsupported.
CriterionOutcome theorem2_check(const FieldHypothesis& field, u64 p);

}  // namespace ffc
