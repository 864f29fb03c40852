#pragma once

#include "cng/group.hpp"

namespace cng {

/// Canonical permutation realizations of the usual small families.
/// Orders are asserted at construction.

PermGroup cyclic_group(unsigned n);              // n-cycle on n points
PermGroup symmetric_group(unsigned n);           // on n points
PermGroup alternating_group(unsigned n);         // on n points
PermGroup dihedral_group(unsigned m);            // order 2m, on m points (m >= 3)
PermGroup dicyclic_group(unsigned m);            // order 4m, regular on 4m points
inline PermGroup quaternion_group() { return dicyclic_group(2); }          // Q8
inline PermGroup generalized_quaternion_group(unsigned order) {
  return dicyclic_group(order / 4);              // order = 2^n >= 8
}

/// SL(2,3) acting on the 8 nonzero vectors of (Z/3)^2.
PermGroup sl23_group();

/// GL(2,3) acting on the 8 nonzero vectors of (Z/3)^2.
PermGroup gl23_group();

/// GL(3,2) acting on the 7 nonzero vectors of (Z/2)^3 (simple, order 168).
PermGroup gl32_group();

} // namespace cng
