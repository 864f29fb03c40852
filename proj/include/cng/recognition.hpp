#pragma once

#include "cng/structure.hpp"

namespace cng {

/// Frobenius decomposition: kernel normal, complement nontrivial,
/// |K| * |H| = |G|, trivial intersection, and C_K(h) = 1 for every
/// nontrivial h in H.
struct FrobeniusStructure {
  PermGroup kernel;
  PermGroup complement;
};

bool is_cyclic(const PermGroup& g, const Limits& limits = default_limits());

/// 2-group of order >= 8 with a unique involution that is not cyclic.
bool is_generalized_quaternion(const PermGroup& g, const Limits& limits = default_limits());

struct CyclicOddTimesQuaternion {
  PermGroup odd_part;      // cyclic of odd order
  PermGroup quaternion_part;
};

/// Nilpotent with cyclic odd part and generalized quaternion Sylow
/// 2-subgroup.  Cyclic groups are excluded (the classifier tests
/// cyclicity first).
std::optional<CyclicOddTimesQuaternion> decompose_cyclic_odd_times_quaternion(
    const PermGroup& g, const Limits& limits = default_limits());

std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g,
                                                      const Limits& limits = default_limits());

bool is_simple(const PermGroup& g, const Limits& limits = default_limits());

/// Socle nonabelian simple with trivial centralizer.
bool is_almost_simple(const PermGroup& g, const Limits& limits = default_limits());

/// Order 24, not nilpotent, normal generalized quaternion Sylow
/// 2-subgroup; this pins the isomorphism type among order-24 groups.
bool is_sl23(const PermGroup& g, const Limits& limits = default_limits());

struct DihedralFrobeniusWitness {
  Permutation involution;
  Permutation odd_element; // [x, a] of odd order > 1
};

/// For non-soluble g finds an involution a and c = [x,a] of odd order > 1;
/// <a, c> is then a dihedral Frobenius subgroup.
std::optional<DihedralFrobeniusWitness> find_dihedral_frobenius(
    const PermGroup& g, const Limits& limits = default_limits());

/// Generator-image isomorphism backtrack; test oracle for small orders.
bool isomorphic_backtrack(const PermGroup& a, const PermGroup& b,
                          const Limits& limits = default_limits());

} // namespace cng
