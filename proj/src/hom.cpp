#include "cng/hom.hpp"

#include <numeric>

namespace cng {

namespace {

Permutation make_pair_perm(const Permutation& a, const Permutation& b) {
  std::vector<unsigned> images(a.degree() + b.degree());
  for (unsigned i = 0; i < a.degree(); ++i) images[i] = a[i];
  for (unsigned i = 0; i < b.degree(); ++i) images[a.degree() + i] = a.degree() + b[i];
  return Permutation(std::move(images));
}

} // namespace

GroupHom::GroupHom(PermGroup domain, PermGroup codomain, std::vector<Permutation> images,
                   bool trusted)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      kernel_(PermGroup::trivial(domain_.degree())),
      image_(PermGroup::trivial(codomain_.degree())) {
  if (images_.size() != domain_.generators().size())
    throw Precondition("one image per domain generator required");
  for (const Permutation& im : images_)
    if (!codomain_.contains(im))
      throw Precondition("generator image lies outside the codomain");

  unsigned dd = domain_.degree();
  unsigned dc = codomain_.degree();
  std::vector<Permutation> pair_gens;
  pair_gens.reserve(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    pair_gens.push_back(make_pair_perm(domain_.generators()[i], images_[i]));

  std::vector<unsigned> dom_first(dd);
  std::iota(dom_first.begin(), dom_first.end(), 0u);
  graph_ = StabChain(dd + dc, pair_gens, dom_first,
                     trusted ? domain_.order() : 0);
  if (graph_.order() != domain_.order())
    throw NotHomomorphism("generator images do not define a homomorphism "
                          "(graph order " +
                          std::to_string(graph_.order()) + " vs domain order " +
                          std::to_string(domain_.order()) + ")");

  // Image of the map.
  image_ = PermGroup(dc, images_);

  // Kernel: elements acting trivially on the codomain points, peeled off
  // as iterated point stabilizers of the graph group.
  PermGroup cur(dd + dc, pair_gens, domain_.order());
  for (unsigned c = dd; c < dd + dc; ++c) {
    bool moved = false;
    for (const Permutation& p : cur.generators())
      if (p[c] != c) {
        moved = true;
        break;
      }
    if (moved) cur = point_stabilizer(cur, c);
  }
  std::vector<Permutation> ker_gens;
  for (const Permutation& p : cur.generators()) {
    std::vector<unsigned> restr(p.images().begin(), p.images().begin() + dd);
    ker_gens.push_back(Permutation(std::move(restr)));
  }
  kernel_ = PermGroup(dd, std::move(ker_gens), cur.order());
  if (kernel_.order() * image_.order() != domain_.order())
    throw NotHomomorphism("kernel/image orders are inconsistent");
}

GroupHom GroupHom::by_images(PermGroup domain, PermGroup codomain,
                             std::vector<Permutation> images) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(images), false);
}

GroupHom GroupHom::trusted(PermGroup domain, PermGroup codomain,
                           std::vector<Permutation> images) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(images), true);
}

Permutation GroupHom::apply(const Permutation& x) const {
  if (x.degree() != domain_.degree()) throw Precondition("degree mismatch in apply");
  unsigned dd = domain_.degree();
  unsigned dc = codomain_.degree();
  auto [residue, ok] = graph_.sift_residue(
      make_pair_perm(x, Permutation::identity(dc)));
  if (!ok) throw Precondition("element is not in the domain");
  // residue = (1, f(x)^-1) because the domain part sifts to the identity.
  for (unsigned i = 0; i < dd; ++i)
    if (residue[i] != i) throw Precondition("element is not in the domain");
  std::vector<unsigned> inv_images(dc);
  for (unsigned i = 0; i < dc; ++i) inv_images[i] = residue[dd + i] - dd;
  return Permutation(std::move(inv_images)).inverse();
}

PermGroup GroupHom::apply_subgroup(const PermGroup& sub) const {
  std::vector<Permutation> gens;
  gens.reserve(sub.generators().size());
  for (const Permutation& g : sub.generators()) gens.push_back(apply(g));
  return PermGroup(codomain_.degree(), std::move(gens));
}

std::pair<PermGroup, GroupHom> coset_action(const PermGroup& g, const PermGroup& h,
                                            const Limits& limits) {
  if (g.degree() != h.degree()) throw Precondition("degree mismatch in coset action");
  if (!g.contains_subgroup(h)) throw Precondition("coset action needs a subgroup");
  std::uint64_t index = g.order() / h.order();
  if (index > limits.max_quotient_degree)
    throw BoundExceeded("coset index " + std::to_string(index) +
                        " exceeds quotient degree bound " +
                        std::to_string(limits.max_quotient_degree));

  // Enumerate right cosets H r by breadth-first search over generators.
  std::vector<Permutation> reps{g.identity()};
  std::vector<Permutation> rep_invs{g.identity()};
  const auto& gens = g.generators();
  std::vector<std::vector<unsigned>> images_table(gens.size());
  for (size_t pos = 0; pos < reps.size(); ++pos) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation moved = reps[pos] * gens[gi];
      size_t found = reps.size();
      for (size_t j = 0; j < reps.size(); ++j) {
        if (h.contains(moved * rep_invs[j])) {
          found = j;
          break;
        }
      }
      if (found == reps.size()) {
        reps.push_back(moved);
        rep_invs.push_back(moved.inverse());
      }
      if (images_table[gi].size() <= pos) images_table[gi].resize(pos + 1);
      images_table[gi][pos] = static_cast<unsigned>(found);
    }
  }
  if (reps.size() != index)
    throw Precondition("coset enumeration mismatch"); // not reachable for subgroups

  unsigned deg = static_cast<unsigned>(index);
  std::vector<Permutation> image_gens;
  image_gens.reserve(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<unsigned> im(deg);
    for (unsigned pos = 0; pos < deg; ++pos) im[pos] = images_table[gi][pos];
    image_gens.push_back(Permutation(std::move(im)));
  }
  PermGroup image(deg == 0 ? 1 : deg, image_gens);
  GroupHom proj = GroupHom::trusted(g, image, std::move(image_gens));
  return {proj.image(), std::move(proj)};
}

} // namespace cng
