#include "cng/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace cng {

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens,
                     std::uint64_t known_order) {
  if (degree == 0) throw Precondition("degree must be positive");
  for (const Permutation& g : gens)
    if (g.degree() != degree) throw Precondition("generator degree mismatch");
  StabChain chain(degree, gens, known_order);
  impl_ = std::make_shared<const Impl>(Impl{degree, std::move(gens), std::move(chain)});
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}, 1); }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) throw Precondition("degree mismatch in membership test");
  return impl_->chain.contains(p);
}

bool PermGroup::for_each_element(std::uint64_t max_count,
                                 const std::function<bool(const Permutation&)>& fn) const {
  if (order() > max_count)
    throw BoundExceeded("group of order " + std::to_string(order()) +
                        " too large for enumeration (bound " +
                        std::to_string(max_count) + ")");
  return impl_->chain.for_each_element(fn);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t max_count) const {
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(std::min<std::uint64_t>(order(), max_count)));
  for_each_element(max_count, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PermGroup PermGroup::stabilizer_subgroup(size_t level) const {
  return PermGroup(degree(), impl_->chain.stabilizer_generators(level),
                   impl_->chain.stabilizer_order(level));
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation p = Permutation::identity(degree());
  const StabChain& ch = impl_->chain;
  for (size_t i = ch.levels().size(); i-- > 0;) {
    const auto& orbit = ch.levels()[i].orbit;
    unsigned pt = orbit[static_cast<size_t>(rng() % orbit.size())];
    p = p * ch.transversal(i, pt);
  }
  return p;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return order() == other.order() && contains_subgroup(other);
}

bool PermGroup::contains_subgroup(const PermGroup& sub) const {
  for (const Permutation& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

PermGroup closure(unsigned degree, const std::vector<Permutation>& perms,
                  std::uint64_t known_order) {
  return PermGroup(degree, perms, known_order);
}

PermGroup point_stabilizer(const PermGroup& g, unsigned point) {
  if (point >= g.degree()) throw Precondition("stabilizer point out of range");
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators())
    if (!p.is_identity()) gens.push_back(p);
  std::vector<Permutation> gen_invs;
  for (const Permutation& p : gens) gen_invs.push_back(p.inverse());

  std::vector<unsigned> orbit{point};
  std::vector<size_t> parent{0};
  std::vector<unsigned> parent_gen{0};
  std::unordered_map<unsigned, size_t> index{{point, 0}};
  std::vector<std::pair<size_t, unsigned>> cycle_edges;
  for (size_t pos = 0; pos < orbit.size(); ++pos) {
    for (unsigned gi = 0; gi < gens.size(); ++gi) {
      unsigned img = gens[gi][orbit[pos]];
      auto it = index.find(img);
      if (it != index.end()) {
        cycle_edges.emplace_back(pos, gi);
        continue;
      }
      index.emplace(img, orbit.size());
      orbit.push_back(img);
      parent.push_back(pos);
      parent_gen.push_back(gi);
    }
  }
  std::uint64_t target = g.order() / orbit.size();
  auto transversal = [&](size_t node) {
    std::vector<unsigned> path;
    while (node != 0) {
      path.push_back(parent_gen[node]);
      node = parent[node];
    }
    Permutation u = Permutation::identity(g.degree());
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * gens[*it];
    return u;
  };
  std::vector<Permutation> sgens;
  if (target > 1) {
    StabChain partial(g.degree());
    for (size_t k = 0; k < cycle_edges.size() && partial.order() < target; ++k) {
      auto [node, gi] = cycle_edges[k];
      Permutation u = transversal(node) * gens[gi];
      Permutation s = u * transversal(index.at(u[point])).inverse();
      if (s.is_identity() || partial.contains(s)) continue;
      partial.insert_generator(s);
      sgens.push_back(std::move(s));
    }
  }
  return PermGroup(g.degree(), std::move(sgens), target);
}

Permutation embed_left(const Permutation& p, unsigned total_degree) {
  std::vector<unsigned> images(total_degree);
  for (unsigned i = 0; i < total_degree; ++i) images[i] = i;
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = p[i];
  return Permutation(std::move(images));
}

Permutation embed_right(const Permutation& p, unsigned total_degree, unsigned offset) {
  std::vector<unsigned> images(total_degree);
  for (unsigned i = 0; i < total_degree; ++i) images[i] = i;
  for (unsigned i = 0; i < p.degree(); ++i) images[offset + i] = offset + p[i];
  return Permutation(std::move(images));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned total = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(embed_left(g, total));
  for (const Permutation& g : b.generators())
    gens.push_back(embed_right(g, total, a.degree()));
  std::uint64_t ord = a.order() * b.order();
  return PermGroup(total, std::move(gens), ord);
}

} // namespace cng
