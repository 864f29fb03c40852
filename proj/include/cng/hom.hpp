#pragma once

#include "cng/group.hpp"

namespace cng {

/// A homomorphism given by generator images, realized as its graph
/// subgroup of domain x codomain acting on the disjoint union of points.
///
/// Validity certificate: the graph group projects onto the domain with
/// equal order, which holds iff the image assignment extends to a
/// homomorphism.  by_images() rejects invalid assignments; trusted() skips
/// the full verification for maps valid by construction (quotient
/// projections) and checks |image| * |kernel| = |domain| instead.
class GroupHom {
public:
  static GroupHom by_images(PermGroup domain, PermGroup codomain,
                            std::vector<Permutation> images);

  /// For internally constructed maps that are homomorphisms by
  /// construction; cheaper (known-order chain builds).
  static GroupHom trusted(PermGroup domain, PermGroup codomain,
                          std::vector<Permutation> images);

  const PermGroup& domain() const { return domain_; }
  const PermGroup& codomain() const { return codomain_; }
  const std::vector<Permutation>& generator_images() const { return images_; }
  const PermGroup& kernel() const { return kernel_; }
  const PermGroup& image() const { return image_; }

  /// Image of an arbitrary domain element.
  Permutation apply(const Permutation& x) const;

  /// Image of a subgroup of the domain.
  PermGroup apply_subgroup(const PermGroup& sub) const;

private:
  GroupHom(PermGroup domain, PermGroup codomain, std::vector<Permutation> images,
           bool trusted);

  Permutation pair_perm(const Permutation& dom_part, const Permutation& cod_part) const;

  PermGroup domain_;
  PermGroup codomain_;
  std::vector<Permutation> images_;
  StabChain graph_;        // base runs through domain points first: apply()
  PermGroup kernel_;
  PermGroup image_;
};

/// Action of G on the right cosets of the subgroup H, with the projection
/// homomorphism.  Requires index within limits.max_quotient_degree.  When
/// H is normal the image is the quotient G/H.
std::pair<PermGroup, GroupHom> coset_action(const PermGroup& g, const PermGroup& h,
                                            const Limits& limits = default_limits());

} // namespace cng
