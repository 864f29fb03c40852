#include "cng/conjugacy.hpp"

#include <algorithm>
#include <deque>

namespace cng {

ConjugationOrbit::ConjugationOrbit(const PermGroup& ambient, const PermGroup& actors,
                                   const Permutation& x, std::uint64_t max_nodes)
    : root_(x) {
  for (const Permutation& g : actors.generators()) {
    if (g.is_identity()) continue;
    gens_.push_back(g);
    gen_invs_.push_back(g.inverse());
  }
  base_ = ambient.chain().base();
  if (base_.empty()) base_.push_back(0); // trivial ambient still needs a key

  auto key_of_path = [&](const std::vector<unsigned>& path, unsigned extra_gen,
                         bool use_extra) {
    std::vector<unsigned> key;
    key.reserve(base_.size());
    for (unsigned b : base_) {
      unsigned p = b;
      if (use_extra) p = gen_invs_[extra_gen][p];
      p = eval(path, p);
      if (use_extra) p = gens_[extra_gen][p];
      key.push_back(p);
    }
    return key;
  };

  std::vector<unsigned> root_path;
  parent_.push_back(0);
  parent_gen_.push_back(0);
  keys_.push_back(key_of_path(root_path, 0, false));
  index_.emplace(keys_[0], 0);

  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t node = queue.front();
    queue.pop_front();
    std::vector<unsigned> path = path_of(node);
    for (unsigned gi = 0; gi < gens_.size(); ++gi) {
      std::vector<unsigned> key = key_of_path(path, gi, true);
      auto it = index_.find(key);
      if (it != index_.end()) {
        cycle_edges_.emplace_back(node, gi);
        continue;
      }
      if (parent_.size() >= max_nodes)
        throw BoundExceeded("conjugation orbit exceeds bound " +
                            std::to_string(max_nodes));
      size_t id = parent_.size();
      parent_.push_back(node);
      parent_gen_.push_back(gi);
      keys_.push_back(key);
      index_.emplace(std::move(key), id);
      queue.push_back(id);
    }
  }
}

std::vector<unsigned> ConjugationOrbit::path_of(size_t node) const {
  std::vector<unsigned> path;
  while (node != 0) {
    path.push_back(parent_gen_[node]);
    node = parent_[node];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

unsigned ConjugationOrbit::eval(const std::vector<unsigned>& path, unsigned point) const {
  // Element is root^w with w the path word; value is w(root(w^-1(point))).
  for (size_t i = path.size(); i-- > 0;) point = gen_invs_[path[i]][point];
  point = root_[point];
  for (unsigned gi : path) point = gens_[gi][point];
  return point;
}

Permutation ConjugationOrbit::conjugator(size_t node) const {
  Permutation w = Permutation::identity(root_.degree());
  for (unsigned gi : path_of(node)) w = w * gens_[gi];
  return w;
}

Permutation ConjugationOrbit::schreier_generator(size_t k) const {
  auto [node, gi] = cycle_edges_[k];
  std::vector<unsigned> path = path_of(node);
  // Locate the endpoint node and build u_node * gen * u_end^-1 pointwise.
  std::vector<unsigned> key;
  key.reserve(base_.size());
  for (unsigned b : base_) {
    unsigned p = gen_invs_[gi][b];
    p = eval(path, p);
    key.push_back(gens_[gi][p]);
  }
  size_t end = index_.at(key);
  std::vector<unsigned> end_path = path_of(end);

  unsigned n = root_.degree();
  std::vector<unsigned> images(n);
  for (unsigned p = 0; p < n; ++p) {
    unsigned q = p;
    for (unsigned e : path) q = gens_[e][q];
    q = gens_[gi][q];
    for (size_t i = end_path.size(); i-- > 0;) q = gen_invs_[end_path[i]][q];
    images[p] = q;
  }
  return Permutation(std::move(images));
}

PermGroup centralizer_from_orbit(const ConjugationOrbit& orbit, unsigned degree,
                                 std::uint64_t actor_order) {
  if (actor_order % orbit.size() != 0)
    throw Precondition("conjugation orbit size does not divide the acting order");
  std::uint64_t target = actor_order / orbit.size();
  std::vector<Permutation> cgens;
  if (target > 1) {
    StabChain partial(degree);
    for (size_t k = 0; k < orbit.cycle_edge_count() && partial.order() < target; ++k) {
      Permutation s = orbit.schreier_generator(k);
      if (s.is_identity() || partial.contains(s)) continue;
      partial.insert_generator(s);
      cgens.push_back(std::move(s));
    }
  }
  return PermGroup(degree, std::move(cgens), target);
}

PermGroup centralizer_in(const PermGroup& ambient, const PermGroup& actors,
                         const Permutation& x, const Limits& limits) {
  ConjugationOrbit orbit(ambient, actors, x, limits.max_enumeration);
  return centralizer_from_orbit(orbit, ambient.degree(), actors.order());
}

PermGroup centralizer_element(const PermGroup& g, const Permutation& x,
                              const Limits& limits) {
  if (!g.contains(x)) throw Precondition("element is not in the group");
  return centralizer_in(g, g, x, limits);
}

std::uint64_t conjugacy_class_size(const PermGroup& g, const Permutation& x,
                                   const Limits& limits) {
  return ConjugationOrbit(g, g, x, limits.max_enumeration).size();
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const Limits& limits) {
  std::vector<ConjugacyClass> classes;
  KeySet seen;
  g.for_each_element(limits.max_enumeration, [&](const Permutation& p) {
    std::vector<unsigned> key = g.element_key(p);
    if (seen.count(key)) return true;
    ConjugationOrbit orbit(g, g, p, limits.max_enumeration);
    for (const auto& k : orbit.node_keys()) seen.insert(k);
    classes.push_back(ConjugacyClass{p, orbit.size()});
    return true;
  });
  return classes;
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g,
                                                         const Limits& limits) {
  std::vector<Permutation> reps;
  for (ConjugacyClass& c : conjugacy_classes(g, limits)) reps.push_back(std::move(c.representative));
  return reps;
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& g) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const Permutation& p : h.generators()) gens.push_back(p.conjugated_by(g));
  return PermGroup(h.degree(), std::move(gens), h.order());
}

} // namespace cng
