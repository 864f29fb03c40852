#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cng/perm.hpp"

namespace cng {

/// Deterministic Schreier-Sims stabilizer chain with first-moved-point base
/// selection.  Basic orbits are stored as Schreier vectors (BFS trees with
/// generator-labelled edges); transversal elements are materialized on
/// demand by walking the tree, so memory stays O(degree) per level.
///
/// When the caller already knows the group order (semidirect products,
/// centralizers from orbit counting, quotient kernels), construction stops
/// as soon as the product of basic orbit lengths reaches it.  The stop is
/// sound: the transversal-product set always has exactly that product as
/// cardinality and is contained in the group, so equality of orders forces
/// set equality.  A wrong hint that is ever reached is impossible for a
/// correct caller; hints are validated to match the final product.
class StabChain {
public:
  struct Level {
    unsigned base_point = 0;
    std::vector<unsigned> gen_indices;   // strong gens fixing all earlier base points
    std::vector<int> tree_edge;          // per point: strong-gen index, kRoot, or kAbsent
    std::vector<unsigned> tree_parent;   // per point: predecessor in the BFS tree
    std::vector<unsigned> orbit;         // points in discovery order
  };

  static constexpr int kAbsent = -1;
  static constexpr int kRoot = -2;

  StabChain() = default;

  /// Empty chain for incremental insertion; see insert_generator.
  explicit StabChain(unsigned degree) : degree_(degree) {}

  /// Build a chain for <gens> on `degree` points.  `known_order` of zero
  /// means "verify fully".
  StabChain(unsigned degree, const std::vector<Permutation>& gens,
            std::uint64_t known_order = 0);

  /// As above but prefer base points from `base_hint` (in order) while any
  /// of them is moved.  Used to push chosen points to the top of the base,
  /// e.g. codomain points when extracting homomorphism kernels.
  StabChain(unsigned degree, const std::vector<Permutation>& gens,
            const std::vector<unsigned>& base_hint, std::uint64_t known_order);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  std::vector<unsigned> base() const;

  /// True iff p is an element of the group.
  bool contains(const Permutation& p) const;

  /// Sift p through every level.  Returns the residue and whether every
  /// level accepted the base image (p is a member iff accepted and the
  /// residue is the identity).
  std::pair<Permutation, bool> sift_residue(const Permutation& p) const;

  /// Images of the base points under p.  For members of the group this is
  /// a perfect key: two elements with equal base images are equal.
  std::vector<unsigned> base_images(const Permutation& p) const;

  /// Transversal element mapping the level's base point to `point`.
  Permutation transversal(size_t level, unsigned point) const;

  /// Order of the stabilizer of the first `level` base points.
  std::uint64_t stabilizer_order(size_t level) const;

  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> stabilizer_generators(size_t level) const;

  /// Visit every element exactly once (transversal-product DFS, amortized
  /// one composition per element).  Deterministic order.  The callback
  /// returns false to stop early; the function returns false if stopped.
  bool for_each_element(const std::function<bool(const Permutation&)>& fn) const;

  /// Unverified insertion: sift p and add the residue as a strong
  /// generator if nontrivial.  Until a chain built this way is complete,
  /// order() is only a lower bound and contains() may report false
  /// negatives; contains() == true stays sound.  Returns true if p grew
  /// the chain.
  bool insert_generator(const Permutation& p);

private:
  void build(const std::vector<Permutation>& gens, const std::vector<unsigned>& base_hint,
             std::uint64_t known_order);
  bool add_generator(const Permutation& p, const std::vector<unsigned>& base_hint);
  void extend_orbit(size_t level, const std::vector<unsigned>& seeds, bool new_gen_only,
                    unsigned new_gen);
  void recompute_order();
  // Multiply x on the right by the inverse transversal of x(base) at `level`,
  // so the result fixes the level's base point.
  Permutation fold_level(size_t level, Permutation x) const;
  // Sift x through levels starting at `from`; returns the residue and the
  // level index where sifting stopped (levels_.size() if it ran through).
  std::pair<Permutation, size_t> sift(Permutation x, size_t from) const;

  unsigned degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

} // namespace cng
