#pragma once

#include "cng/matrix_action.hpp"

namespace cng {

/// Quaternion with half-integer coordinates, stored doubled so the 24
/// Hurwitz units are exact integers.
struct Quaternion {
  std::int64_t w2 = 0, x2 = 0, y2 = 0, z2 = 0;
  bool operator==(const Quaternion&) const = default;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);

/// The 24 unit quaternions of the Hurwitz order, in a fixed order.
const std::vector<Quaternion>& hurwitz_units();

/// Left multiplication by q on the Hurwitz lattice in the integral basis
/// ((1+i+j+k)/2, i, j, k), reduced mod m.  Exact integer matrix reduced;
/// no floating point anywhere.
Mat hurwitz_left_mult_matrix(const Quaternion& q, unsigned modulus);

/// Integer determinant of (left multiplication by q) - identity.
std::int64_t hurwitz_left_mult_det_minus_identity(const Quaternion& q);

/// The unit group acting on itself by left multiplication: a regular
/// permutation representation of SL(2,3) on 24 points, generated by an
/// element of order 4 and one of order 3.
PermGroup hurwitz_unit_group();

/// Index of a unit in hurwitz_units(); throws if not a unit.
size_t hurwitz_unit_index(const Quaternion& q);

// ---- example families -------------------------------------------------------

/// V x| K with V = (Z/p)^d for the least d at which fpf_search produces a
/// fixed-point-free action of K (cyclic, or cyclic-odd x quaternion).
PermGroup example1(const PermGroup& k, unsigned p, const Limits& limits = default_limits());

/// V x| D_2m with V = (Z/2)^k and every nontrivial odd-order element of
/// the dihedral group acting without fixed points.
PermGroup example2(unsigned m, unsigned k, const Limits& limits = default_limits());

struct Example3Result {
  PermGroup group;             // G = <va, d, V_p>
  PermGroup designated_normal; // N = (V_2 meet G) + V_p
  std::uint64_t v2_meet_order; // |V_2 meet G|
};

/// 4-dimensional quaternion-lattice action of SL(2,3) on
/// (Z/(p*2^n))^4 = V_p + V_2; returns the subgroup generated by a twisted
/// order-4 element, the order-3 element, and the V_p translations.
Example3Result example3(unsigned p, unsigned n, const Limits& limits = default_limits());

/// (Z/2)^4 x| A5 with the natural SL(2,4)-module structure; order 960.
PermGroup example4_a5(const Limits& limits = default_limits());

/// Negative control: (Z/p)^2 x| SL(2,3), Frobenius but not CN (the central
/// involution of the complement has a non-nilpotent centralizer).
PermGroup negative_frobenius_sl23(unsigned p, const Limits& limits = default_limits());

} // namespace cng
