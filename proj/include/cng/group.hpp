#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "cng/stab_chain.hpp"

namespace cng {

/// An immutable permutation group: generators plus an eagerly built
/// stabilizer chain.  Copies share the underlying data, so groups are cheap
/// to pass around and safe to read from concurrent analyses.
///
/// Subgroups are PermGroups of the same degree whose generators are members
/// of the parent; no parent pointer is kept.
class PermGroup {
public:
  /// Group generated by `gens` on `degree` points.  A nonzero
  /// `known_order` must equal the true order and makes construction stop
  /// as soon as the chain reaches it.
  PermGroup(unsigned degree, std::vector<Permutation> gens, std::uint64_t known_order = 0);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return impl_->degree; }
  const std::vector<Permutation>& generators() const { return impl_->gens; }
  const StabChain& chain() const { return impl_->chain; }
  std::uint64_t order() const { return impl_->chain.order(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& p) const;

  /// Identity of this group's degree.
  Permutation identity() const { return Permutation::identity(degree()); }

  /// Key identifying elements of this group: images of the chain's base.
  std::vector<unsigned> element_key(const Permutation& p) const {
    return impl_->chain.base_images(p);
  }

  /// Visit every element once in a fixed deterministic order.  Throws
  /// BoundExceeded when order() > max_count.  Callback returns false to
  /// stop; returns false iff stopped early.
  bool for_each_element(std::uint64_t max_count,
                        const std::function<bool(const Permutation&)>& fn) const;

  /// All elements, in stream order.
  std::vector<Permutation> elements(std::uint64_t max_count) const;

  /// Stabilizer of the first `level` base points, as a group (known order
  /// comes from the chain, so this is cheap).
  PermGroup stabilizer_subgroup(size_t level) const;

  /// Uniformly random element (for test properties).
  Permutation random_element(std::mt19937_64& rng) const;

  bool same_group_as(const PermGroup& other) const;
  bool contains_subgroup(const PermGroup& sub) const;

private:
  struct Impl {
    unsigned degree;
    std::vector<Permutation> gens;
    StabChain chain;
  };
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Smallest group containing the given permutations.
PermGroup closure(unsigned degree, const std::vector<Permutation>& perms,
                  std::uint64_t known_order = 0);

/// Stabilizer of a point: orbit plus Schreier generators, with the chain
/// completed against the known order |g| / |orbit|.
PermGroup point_stabilizer(const PermGroup& g, unsigned point);

/// A and B acting on disjoint point sets; order |A|*|B|.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Embed a permutation of A's points into the product's degree.
Permutation embed_left(const Permutation& p, unsigned total_degree);
Permutation embed_right(const Permutation& p, unsigned total_degree, unsigned offset);

} // namespace cng
