#pragma once

#include <unordered_map>
#include <unordered_set>

#include "cng/group.hpp"

namespace cng {

/// Hash for element keys (base-image tuples).
struct KeyHash {
  size_t operator()(const std::vector<unsigned>& v) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (unsigned x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

using KeySet = std::unordered_set<std::vector<unsigned>, KeyHash>;

/// Breadth-first orbit of a permutation under conjugation by `actors`,
/// with node identity resolved through `ambient`'s chain (every conjugate
/// must lie in `ambient`, so base images identify nodes exactly).
///
/// Nodes are stored as conjugating words over the actor generators; no
/// conjugate is materialized during the sweep, so a class of N elements
/// costs O(N * gens * word length) point lookups.  Cycle edges are kept so
/// stabilizer (= centralizer) generators can be materialized afterwards.
class ConjugationOrbit {
public:
  ConjugationOrbit(const PermGroup& ambient, const PermGroup& actors,
                   const Permutation& x, std::uint64_t max_nodes);

  std::uint64_t size() const { return parent_.size(); }
  const std::vector<std::vector<unsigned>>& node_keys() const { return keys_; }
  size_t cycle_edge_count() const { return cycle_edges_.size(); }

  /// Materialize the Schreier generator of the k-th cycle edge; it lies in
  /// the centralizer of the root element.
  Permutation schreier_generator(size_t k) const;

  /// Materialize the conjugating word of a node (maps root element to the
  /// node's element under conjugation).
  Permutation conjugator(size_t node) const;

private:
  std::vector<unsigned> path_of(size_t node) const;
  // Evaluate the node element (root^word) at a point.
  unsigned eval(const std::vector<unsigned>& path, unsigned point) const;

  const Permutation root_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> gen_invs_;
  std::vector<unsigned> base_;
  std::vector<size_t> parent_;
  std::vector<unsigned> parent_gen_;
  std::vector<std::vector<unsigned>> keys_;
  std::vector<std::pair<size_t, unsigned>> cycle_edges_; // (node, gen index)
  std::unordered_map<std::vector<unsigned>, size_t, KeyHash> index_;
};

/// Centralizer of x inside `actors`; `ambient` supplies element keys and
/// must contain every conjugate of x by `actors`.
PermGroup centralizer_in(const PermGroup& ambient, const PermGroup& actors,
                         const Permutation& x, const Limits& limits = default_limits());

/// Stabilizer extraction from an already computed orbit: Schreier
/// generators are materialized until the chain reaches
/// actor_order / orbit size.
PermGroup centralizer_from_orbit(const ConjugationOrbit& orbit, unsigned degree,
                                 std::uint64_t actor_order);

/// Centralizer of x in g.  Requires x in g.
PermGroup centralizer_element(const PermGroup& g, const Permutation& x,
                              const Limits& limits = default_limits());

std::uint64_t conjugacy_class_size(const PermGroup& g, const Permutation& x,
                                   const Limits& limits = default_limits());

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size;
};

/// One representative per conjugacy class, identity first, in element
/// stream order.  Requires order(g) within the enumeration bound.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              const Limits& limits = default_limits());

std::vector<Permutation> conjugacy_class_representatives(
    const PermGroup& g, const Limits& limits = default_limits());

/// H^g as a group (same degree, order |H|).
PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& g);

} // namespace cng
