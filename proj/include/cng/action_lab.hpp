#pragma once

#include "cng/matrix_action.hpp"
#include "cng/structure.hpp"

namespace cng {

/// A group action materialized inside a semidirect container: `target` is
/// normal in `ambient`, `actors` meets it trivially, and together they
/// fill the ambient group; actors act on the target by conjugation.
struct ActionInstance {
  PermGroup ambient;
  PermGroup target;
  PermGroup actors;
};

/// Validates the container invariants.
ActionInstance make_instance(PermGroup ambient, PermGroup target, PermGroup actors);

/// Semidirect container of a matrix action: target = translations,
/// actors = the matrix images of k's generators.
ActionInstance instance_from_action(const MatrixAction& action, const PermGroup& k,
                                    const Limits& limits = default_limits());

enum class CheckStatus { Pass, Inapplicable, Counterexample };

struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// [G, A]: the span of g^-1 * g^a inside the target.
PermGroup commutator_span(const ActionInstance& inst,
                          const Limits& limits = default_limits());

/// Fixed points of the actors inside the target.
PermGroup actor_fixed_points(const ActionInstance& inst,
                             const Limits& limits = default_limits());

/// Coprime-action facts, verified as literal subgroup equalities:
///   (i)   G = [G,A] C_G(A)
///   (ii)  [G,A,A] = [G,A]
///   (iii) C_{G/N}(A) = image of C_G(A), for every A-invariant normal N
///         from the normal-subgroup scan
///   (iv)  for nilpotent G and noncyclic abelian A, G is the pointwise
///         product of the C_G(a) over nontrivial a
/// Inapplicable unless gcd(|G|, |A|) = 1; (iv) additionally needs its
/// extra hypotheses.
CheckResult check_coprime_lemma(const ActionInstance& inst,
                                const Limits& limits = default_limits());

/// Coprime automorphisms of cyclic prime-power and generalized quaternion
/// groups: trivial on cyclic 2-groups; trivial or fixed-point-free on
/// cyclic p-groups; trivial or of order 3 on Q8 (and only Q8).
CheckResult check_cyclic_automorphism_lemma(const ActionInstance& inst,
                                            const Limits& limits = default_limits());

/// Noncyclic actors of order p^2 on an abelian target: every p-th power
/// lies in the subgroup generated by the centralizers of the nontrivial
/// actors.  No coprimality needed.
CheckResult check_rank_expo(const ActionInstance& inst,
                            const Limits& limits = default_limits());

/// Frobenius actors FH with C_G(F) = 1 and (|G|, |F|) = 1 generate the
/// target from the conjugates of C_G(H).
CheckResult check_frobenius_generation(const ActionInstance& inst,
                                       const Limits& limits = default_limits());

/// Prime-order fixed-point-free actors force a nilpotent target.
CheckResult check_fpf_nilpotent(const ActionInstance& inst,
                                const Limits& limits = default_limits());

/// x * x^a * ... * x^(a^(p-1)) trivial for every x in the target (actors
/// of prime order p).
bool is_splitting(const ActionInstance& inst, const Limits& limits = default_limits());

/// The product identity agrees with the semidirect formulation: x*a has
/// order p in the ambient group for every x.
CheckResult splitting_consistency(const ActionInstance& inst,
                                  const Limits& limits = default_limits());

/// A named instance for the seeded property suites.
struct NamedInstance {
  std::string name;
  ActionInstance instance;
};

enum class SuiteKind {
  Coprime,
  CyclicAutomorphism,
  RankExponent,
  FrobeniusGeneration,
  FpfNilpotent,
  Splitting,
};

std::string to_string(SuiteKind k);

/// Deterministic pseudo-random sample of `count` instances applicable to
/// the given suite; the same (seed, kind, count) yields the same list.
std::vector<NamedInstance> suite_instances(SuiteKind kind, std::uint64_t seed,
                                           size_t count,
                                           const Limits& limits = default_limits());

/// Run the suite's check on one instance.
CheckResult run_suite_check(SuiteKind kind, const ActionInstance& inst,
                            const Limits& limits = default_limits());

/// Heisenberg group of order 343 with a fixed-point-free diagonal
/// automorphism of order 3, in its semidirect container on 343 points.
ActionInstance heisenberg7_instance();

} // namespace cng
