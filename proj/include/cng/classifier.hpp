#pragma once

#include <string>

#include "cng/recognition.hpp"

namespace cng {

enum class QuotientCase {
  Cyclic,
  CyclicOddTimesQuaternion,
  FrobeniusQuotient,
  SL23,
  AlmostSimple,
  NotCN,
  TheoremViolation,
};

std::string to_string(QuotientCase c);

struct SideCondition {
  std::string name;
  bool pass;
};

struct FrobeniusData {
  std::uint64_t kernel_order;
  std::uint64_t complement_order;
};

/// Verdict of the quotient case analysis with witnesses.
/// TheoremViolation never occurs on a correct implementation; its
/// appearance is the harness's counterexample alarm.
struct ClassificationReport {
  std::string group_name;
  std::uint64_t group_order = 0;
  bool is_cn = false;
  std::optional<Permutation> cn_witness;
  std::uint64_t fitting_order = 0;
  std::vector<unsigned> fitting_primes;
  std::uint64_t quotient_order = 0;
  QuotientCase verdict = QuotientCase::TheoremViolation;
  std::vector<SideCondition> side_conditions;
  std::optional<FrobeniusData> frobenius_data;
};

/// Nilpotent-centralizer test.  Returns an element whose centralizer is
/// not nilpotent, or nothing if every centralizer is nilpotent.  It
/// suffices to test prime-order class representatives: centralizers only
/// grow when passing to a power of prime order, and subgroups of
/// nilpotent groups are nilpotent.
std::optional<Permutation> cn_witness(const PermGroup& g,
                                      const Limits& limits = default_limits());

inline bool is_cn(const PermGroup& g, const Limits& limits = default_limits()) {
  return !cn_witness(g, limits).has_value();
}

ClassificationReport classify(const PermGroup& g, const std::string& name = "",
                              const Limits& limits = default_limits());

enum class SweepStatus { Pass, Skipped, Counterexample };

struct SweepResult {
  SweepStatus status = SweepStatus::Pass;
  std::string detail;
};

/// For CN groups whose Fitting subgroup has at least two prime divisors:
/// every p-element outside the p-core centralizes nothing in it and meets
/// the Fitting subgroup trivially.  `known_cn` skips the CN recheck when
/// the caller already classified the group.
SweepResult lemma41_sweep(const PermGroup& g, const Limits& limits = default_limits(),
                          std::optional<bool> known_cn = std::nullopt);

/// A CN group with a nontrivial normal odd-order subgroup must be soluble.
SweepResult odd_normal_implies_soluble(const PermGroup& g,
                                       const Limits& limits = default_limits(),
                                       std::optional<bool> known_cn = std::nullopt);

/// For CN groups: every noncyclic subgroup of order p^2 centralizes every
/// invariant p'-subgroup.  The p'-subgroup scan is exhaustive within the
/// subgroup-scan bound (closures <z^B> over all p'-elements z cover every
/// invariant p'-subgroup); above it only normal p'-candidates are tested.
SweepResult eleme_shadow_sweep(const PermGroup& g, const Limits& limits = default_limits(),
                               std::optional<bool> known_cn = std::nullopt);

} // namespace cng
