#include "ffc/criteria.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>

#include "ffc/wendt.hpp"

namespace ffc {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 2> kVerdictNames{{
    {Verdict::Established, "Established"},
    {Verdict::NotEstablished, "NotEstablished"},
}};

constexpr std::array<std::pair<Reason, std::string_view>, 14> kReasonNames{{
    {Reason::Witness, "witness"},
    {Reason::Hypotheses, "hypotheses"},
    {Reason::ClassNumberDivisible, "class_number_divisible"},
    {Reason::SixDividesN, "six_divides_n"},
    {Reason::QNotPrime, "q_not_prime"},
    {Reason::QNotSplit, "q_not_split"},
    {Reason::NPowerTrivial, "n_power_trivial"},
    {Reason::WendtDivisible, "wendt_divisible"},
    {Reason::NoCandidate, "no_candidate"},
    {Reason::Exhausted, "exhausted"},
    {Reason::Condition1Fails, "condition1_fails"},
    {Reason::NoDegreeOnePrime, "no_degree_one_prime"},
    {Reason::RamificationTooLarge, "ramification_too_large"},
    {Reason::ResidueDegreeNotOne, "residue_degree_not_one"},
}};

CriterionOutcome not_established(Reason reason) { return {Verdict::NotEstablished, reason, {}}; }

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  for (const auto& [value, name] : kVerdictNames) {
    if (value == v) return name;
  }
  return "?";
}

std::string_view to_string(Reason r) noexcept {
  for (const auto& [value, name] : kReasonNames) {
    if (value == r) return name;
  }
  return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view s) noexcept {
  for (const auto& [value, name] : kVerdictNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::optional<Reason> reason_from_string(std::string_view s) noexcept {
  for (const auto& [value, name] : kReasonNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::string_view to_string(PureFieldCase c) noexcept {
  switch (c) {
    case PureFieldCase::Unramified: return "Unramified";
    case PureFieldCase::Cubic: return "Cubic";
    case PureFieldCase::CongruentExponent: return "CongruentExponent";
  }
  return "?";
}

void require_odd_prime(u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime");
  }
}

CriterionOutcome theorem1_check(const ImaginaryQuadraticField& field, u64 p, u64 n) {
  require_odd_prime(p);
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n % 6 == 0) return not_established(Reason::SixDividesN);
  if (field.class_number() % p == 0) return not_established(Reason::ClassNumberDivisible);

  const u128 wide_q = static_cast<u128>(n) * p + 1;
  if (wide_q >= kModulusLimit) {
    fail(ErrorKind::Overflow, "q = " + std::to_string(n) + " * " + std::to_string(p) +
                                  " + 1 is not below 2^62");
  }
  const u64 q = static_cast<u64>(wide_q);
  if (!is_prime(q)) return not_established(Reason::QNotPrime);
  if (field.splitting_type(q) != Splitting::Split) return not_established(Reason::QNotSplit);

  const Modulus m(q);
  if (mod_pow(n % q, n, m) == 1) return not_established(Reason::NPowerTrivial);
  if (wendt_divides(n, q, p)) return not_established(Reason::WendtDivisible);

  return {Verdict::Established, Reason::Witness, Theorem1Witness{p, n, q}};
}

u64 theorem1_search_cap(u64 p, std::optional<u64> n_max) {
  require_odd_prime(p);
  u64 cap = n_max.value_or(kDefaultSearchCap);
  try {
    cap = std::min(cap, dickson_bound(p));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
  }
  // Keep q = np + 1 inside the modulus range.
  return std::min(cap, (kModulusLimit - 2) / p);
}

std::optional<Theorem1Witness> theorem1_search(const ImaginaryQuadraticField& field, u64 p,
                                               std::optional<u64> n_max) {
  const u64 cap = theorem1_search_cap(p, n_max);
  if (field.class_number() % p == 0) return std::nullopt;
  for (u64 n = 2; n <= cap; n += 2) {
    if (n % 6 == 0) continue;
    const auto outcome = theorem1_check(field, p, n);
    if (outcome.established()) return outcome.witness;
  }
  return std::nullopt;
}

CriterionOutcome sophie_germain_check(const ImaginaryQuadraticField& field, u64 p) {
  return theorem1_check(field, p, 2);
}

CriterionOutcome corollary2_check(u64 p) {
  require_odd_prime(p);
  const ImaginaryQuadraticField gaussian(-1);
  for (u64 n : {4u, 8u, 16u}) {
    auto outcome = theorem1_check(gaussian, p, n);
    if (outcome.established()) return outcome;
  }
  return not_established(Reason::NoCandidate);
}

namespace {

void require_condition1_range(u64 p) {
  require_odd_prime(p);
  if (p >= (u64{1} << 31)) {
    fail(ErrorKind::Overflow, "p^2 must stay below 2^62, got p = " + std::to_string(p));
  }
}

// Calls on_violation(a) for each a in [1, (p-3)/2] with 1 + a^p = (1+a)^p
// mod p^2, until it returns false. Each a^p is reused as the next (1+a)^p.
template <class OnViolation>
void scan_condition1(u64 p, OnViolation&& on_violation) {
  const u64 last = (p - 3) / 2;
  if (last == 0) return;
  const Montgomery mont(p * p);
  const u64 one = mont.one();
  u64 a_pow = mont.pow(one, p);  // 1^p
  for (u64 a = 1; a <= last; ++a) {
    const u64 next_pow = mont.pow(mont.to_mont(a + 1), p);
    u64 lhs = a_pow + one;
    if (lhs >= mont.modulus()) lhs -= mont.modulus();
    if (lhs == next_pow && !on_violation(a)) return;
    a_pow = next_pow;
  }
}

}  // namespace

Condition1Report condition1_check(u64 p) {
  require_condition1_range(p);
  Condition1Report report{p, true, {}};
  scan_condition1(p, [&](u64 a) {
    report.witnesses.push_back(a);
    return true;
  });
  report.holds = report.witnesses.empty();
  return report;
}

bool condition1_holds(u64 p) {
  require_condition1_range(p);
  bool holds = true;
  scan_condition1(p, [&](u64) {
    holds = false;
    return false;
  });
  return holds;
}

DegreeOnePrime pure_field_residue_degree_one(i64 d, u64 n, u64 p) {
  require_odd_prime(p);
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (d == -1 || d == 0 || d == 1) {
    fail(ErrorKind::InvalidArgument, "d must not be -1, 0 or 1");
  }
  if (n == 3 && p % 3 == 2 && p >= 5) {
    // Cubing is a bijection on F_p, so either X^3 - d has a simple root mod p
    // (p not dividing 3d), or p | d and the prime above p is totally
    // ramified with residue degree 1 and e = 3 <= p - 1.
    if (!is_cubefree(d)) fail(ErrorKind::NotCubefree, std::to_string(d));
    return {true, PureFieldCase::Cubic};
  }

  const Modulus mod_p(p);
  const u64 d_mod_p = reduce(d, mod_p);
  if (d_mod_p == 0 || n % p == 0) {
    fail(ErrorKind::Unsupported, "p = " + std::to_string(p) + " divides d n for Q(" +
                                     std::to_string(d) + "^(1/" + std::to_string(n) + "))");
  }
  if (!is_squarefree(d)) fail(ErrorKind::NotSquarefree, std::to_string(d));

  if (n % (p - 1) == 1 % (p - 1)) {
    return {true, PureFieldCase::CongruentExponent};
  }
  // p is unramified; a degree-one prime exists iff X^n - d has a root mod p,
  // iff d is an n-th power in F_p^*, iff d^((p-1)/g) = 1 with g = gcd(n, p-1).
  const u64 g = std::gcd(n, p - 1);
  return {mod_pow(d_mod_p, (p - 1) / g, mod_p) == 1, PureFieldCase::Unramified};
}

namespace {

struct HypothesisOne {
  u64 p;

  Reason operator()(const QuadraticField& f) const {
    const i64 disc = fundamental_discriminant(f.d);
    // Split or ramified both give a degree-one prime, with e <= 2 <= p - 1.
    return splitting_type(disc, p) == Splitting::Inert ? Reason::NoDegreeOnePrime
                                                       : Reason::Hypotheses;
  }
  Reason operator()(const PureField& f) const {
    return pure_field_residue_degree_one(f.d, f.n, p).exists ? Reason::Hypotheses
                                                             : Reason::NoDegreeOnePrime;
  }
  Reason operator()(const TotallyRamifiedField& f) const {
    if (f.degree == 0) fail(ErrorKind::InvalidArgument, "degree must be positive");
    return f.degree <= p - 1 ? Reason::Hypotheses : Reason::RamificationTooLarge;
  }
  Reason operator()(const AssertedPrime& f) const {
    if (f.e == 0 || f.f == 0) {
      fail(ErrorKind::InvalidArgument, "e and f must be positive");
    }
    if (f.f != 1) return Reason::ResidueDegreeNotOne;
    return f.e <= p - 1 ? Reason::Hypotheses : Reason::RamificationTooLarge;
  }
};

}  // namespace

CriterionOutcome theorem2_check(const FieldHypothesis& field, u64 p) {
  require_odd_prime(p);
  if (!condition1_holds(p)) return not_established(Reason::Condition1Fails);
  const Reason reason = std::visit(HypothesisOne{p}, field);
  if (reason != Reason::Hypotheses) return not_established(reason);
  return {Verdict::Established, Reason::Hypotheses, std::nullopt};
}

}  // namespace ffc
