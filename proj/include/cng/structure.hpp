#pragma once

#include <optional>

#include "cng/conjugacy.hpp"
#include "cng/hom.hpp"

namespace cng {

std::vector<unsigned> prime_divisors(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, unsigned p);
inline std::uint64_t odd_part(std::uint64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}
/// True for groups of order p^k (k >= 0; the trivial group is a p-group).
bool is_p_group_order(std::uint64_t order, unsigned p);

/// Centralizer of the subgroup h in g (intersection of the element
/// centralizers of h's generators).
PermGroup centralizer_subgroup(const PermGroup& g, const PermGroup& h,
                               const Limits& limits = default_limits());

PermGroup center(const PermGroup& g, const Limits& limits = default_limits());

bool is_normal(const PermGroup& g, const PermGroup& h);

/// Normalizer of h in g, by the orbit of h under conjugation plus Schreier
/// generators of the stabilizer.  The spec examples pin its values against
/// the filtered-enumeration oracle in the tests.
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Limits& limits = default_limits());

/// Smallest normal subgroup of g containing the seed elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed,
                         const Limits& limits = default_limits());

PermGroup derived_subgroup(const PermGroup& g, const Limits& limits = default_limits());

/// A Sylow p-subgroup, deterministic: recurse into stabilizers while they
/// keep the full p-part, otherwise grow by normalizer ascent from a
/// p-element seed (maximal order over the generator-power pool, ties by
/// lexicographically least permutation).
PermGroup sylow_subgroup(const PermGroup& g, unsigned p,
                         const Limits& limits = default_limits());

/// Largest normal p-subgroup: intersection of the conjugates of one Sylow
/// p-subgroup, computed as a shrinking walk.
PermGroup p_core(const PermGroup& g, unsigned p, const Limits& limits = default_limits());

/// Fitting subgroup: product of the p-cores.
PermGroup fitting_subgroup(const PermGroup& g, const Limits& limits = default_limits());

/// Primary test: every Sylow subgroup normal.  The coprime-commuting
/// criterion is the cross-check oracle in the tests.
bool is_nilpotent(const PermGroup& g, const Limits& limits = default_limits());

/// Iterated Fitting quotients; equivalent to the derived-series test,
/// which the tests cross-check.
bool is_soluble(const PermGroup& g, const Limits& limits = default_limits());

/// Length of the ascending Fitting series.  Throws Precondition on
/// non-soluble input.
unsigned fitting_height(const PermGroup& g, const Limits& limits = default_limits());

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                const Limits& limits = default_limits());

PermGroup socle(const PermGroup& g, const Limits& limits = default_limits());

/// All normal subgroups (join closure of the normal closures of the
/// conjugacy classes).  Requires order within the subgroup-scan bound.
std::vector<PermGroup> normal_subgroups(const PermGroup& g,
                                        const Limits& limits = default_limits());

/// Intersection of two subgroups of a common parent; enumerates the
/// smaller one, so it is bounded by max_enumeration.
PermGroup intersect_subgroups(const PermGroup& a, const PermGroup& b,
                              const Limits& limits = default_limits());

/// Canonical identifier of a small subgroup inside a parent: the sorted
/// element keys, flattened.  Bounded by max_size elements.
std::vector<unsigned> subgroup_element_keys(const PermGroup& parent, const PermGroup& h,
                                            std::uint64_t max_size = 1 << 16);

struct SylowConfinedRep {
  Permutation element;
  unsigned prime;
  std::uint64_t class_size;
};

/// One representative per conjugacy class of p-elements (optionally only
/// elements of order exactly p), found inside a Sylow p-subgroup.
std::vector<SylowConfinedRep> sylow_confined_class_reps(
    const PermGroup& g, unsigned p, bool only_prime_order,
    const Limits& limits = default_limits());

} // namespace cng
