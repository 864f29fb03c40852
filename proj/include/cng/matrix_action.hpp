#pragma once

#include <optional>

#include "cng/hom.hpp"

namespace cng {

/// Square matrix over Z/m, row-major; vectors act as rows (v -> v*M), so
/// matrix products compose left-to-right like permutations.
struct Mat {
  unsigned dim = 0;
  unsigned modulus = 0;
  std::vector<unsigned> a;

  static Mat identity(unsigned dim, unsigned modulus);
  static Mat zero(unsigned dim, unsigned modulus);
  unsigned& at(unsigned r, unsigned c) { return a[r * dim + c]; }
  unsigned at(unsigned r, unsigned c) const { return a[r * dim + c]; }
  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& x, std::uint64_t e);
Mat mat_sub_identity(const Mat& x); // x - I mod m

/// Determinant of the integer lift, reduced mod m (dim <= 6).
unsigned det_mod(const Mat& x);

/// Invertible over Z/m iff gcd(det, m) = 1.
bool mat_invertible(const Mat& x);

/// Trivial kernel of (x - I), i.e. the action of x fixes only zero.
bool mat_fixed_point_free(const Mat& x);

std::uint64_t gl_order(unsigned dim, unsigned modulus);

/// Action of a group K on the module (Z/m)^dim: one invertible matrix per
/// generator, extending to a homomorphism K -> GL(dim, Z/m).
struct MatrixAction {
  unsigned dim = 0;
  unsigned modulus = 0;
  std::vector<Mat> matrices;
};

/// Permutation of the m^dim vectors induced by a matrix (index encoding:
/// sum of v_i * m^i).
Permutation matrix_perm(const Mat& m);
Permutation translation_perm(unsigned dim, unsigned modulus,
                             const std::vector<unsigned>& v);
unsigned vector_index(const std::vector<unsigned>& v, unsigned modulus);

/// Validates invertibility and the homomorphism certificate against the
/// permutation realization of the matrix group.  Returns the image order
/// (= |K| iff the action is faithful).
std::uint64_t validate_action(const MatrixAction& action, const PermGroup& k);

/// Semidirect product V x| K on the point set V = (Z/m)^dim, generated by
/// basis translations and the matrix images of K's generators.
PermGroup semidirect(const MatrixAction& action, const PermGroup& k,
                     const Limits& limits = default_limits());

enum class ExcludeClass {
  None,        // every nontrivial element must be fixed-point-free
  TwoElements, // 2-elements may have fixed points (2'-semiregular action)
};

/// Element-wise (perm, matrix) table of the action over the whole of K.
std::vector<std::pair<Permutation, Mat>> action_element_table(
    const MatrixAction& action, const PermGroup& k, std::uint64_t max_order = 1 << 16);

/// Post-hoc certificate, independent of how the action was found: each
/// non-excluded nontrivial element's matrix minus identity has trivial
/// kernel mod m.
bool certify_fixed_point_free(const MatrixAction& action, const PermGroup& k,
                              ExcludeClass exclude);

/// Deterministic backtracking over generator image tuples in lexicographic
/// matrix order when |GL(dim,m)|^#gens fits the budget; for recognized
/// shapes beyond the budget (cyclic-odd times Q8 over an odd prime,
/// dihedral over Z/2, used by the example families) the action is
/// synthesized in closed form and certified post hoc.  Returns nothing if
/// the search space was covered and no action exists; throws
/// SearchExhausted when the budget is exceeded and no synthesis applies.
std::optional<MatrixAction> fpf_search(const PermGroup& k, unsigned dim,
                                       unsigned modulus, ExcludeClass exclude,
                                       const Limits& limits = default_limits());

/// Scalar tensor integral-quaternion action for acting groups of shape
/// cyclic-odd x Q8 (or plain Q8 / odd cyclic dividing modulus-1) in
/// dimension 4 over Z/m with m odd.  Defined with the quaternion machinery.
std::optional<MatrixAction> quaternionic_synthesis(const PermGroup& k, unsigned dim,
                                                   unsigned modulus,
                                                   const Limits& limits = default_limits());

} // namespace cng
