#include "cng/structure.hpp"

#include <algorithm>
#include <map>

namespace cng {

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(static_cast<unsigned>(n));
  return ps;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_p_group_order(std::uint64_t order, unsigned p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

PermGroup centralizer_subgroup(const PermGroup& g, const PermGroup& h,
                               const Limits& limits) {
  PermGroup cur = g;
  for (const Permutation& x : h.generators()) {
    if (x.is_identity()) continue;
    cur = centralizer_in(g, cur, x, limits);
  }
  return cur;
}

PermGroup center(const PermGroup& g, const Limits& limits) {
  return centralizer_subgroup(g, g, limits);
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const Permutation& x : g.generators())
    for (const Permutation& y : h.generators())
      if (!h.contains(y.conjugated_by(x))) return false;
  return true;
}

std::vector<unsigned> subgroup_element_keys(const PermGroup& parent, const PermGroup& h,
                                            std::uint64_t max_size) {
  std::vector<std::vector<unsigned>> keys;
  keys.reserve(static_cast<size_t>(h.order()));
  h.for_each_element(max_size, [&](const Permutation& p) {
    keys.push_back(parent.element_key(p));
    return true;
  });
  std::sort(keys.begin(), keys.end());
  std::vector<unsigned> flat;
  flat.reserve(keys.size() * (keys.empty() ? 0 : keys[0].size()));
  for (const auto& k : keys) flat.insert(flat.end(), k.begin(), k.end());
  return flat;
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  if (!g.contains_subgroup(h)) throw Precondition("normalizer needs a subgroup");
  constexpr std::uint64_t kKeyableSize = 256;
  bool keyable = h.order() <= kKeyableSize;

  struct Node {
    PermGroup group;
    Permutation conjugator;
  };
  std::vector<Node> nodes{{h, g.identity()}};
  std::unordered_map<std::vector<unsigned>, size_t, KeyHash> index;
  if (keyable) index.emplace(subgroup_element_keys(g, h, kKeyableSize), 0);
  std::vector<std::pair<size_t, unsigned>> cycle_edges;
  const auto& gens = g.generators();

  for (size_t pos = 0; pos < nodes.size(); ++pos) {
    for (unsigned gi = 0; gi < gens.size(); ++gi) {
      PermGroup moved = conjugate_subgroup(nodes[pos].group, gens[gi]);
      size_t found = nodes.size();
      if (keyable) {
        auto it = index.find(subgroup_element_keys(g, moved, kKeyableSize));
        if (it != index.end()) found = it->second;
      } else {
        for (size_t j = 0; j < nodes.size(); ++j) {
          if (nodes[j].group.contains_subgroup(moved)) {
            found = j;
            break;
          }
        }
      }
      if (found < nodes.size()) {
        cycle_edges.emplace_back(pos, gi);
        continue;
      }
      if (nodes.size() >= limits.max_quotient_degree)
        throw BoundExceeded("subgroup conjugation orbit exceeds bound " +
                            std::to_string(limits.max_quotient_degree));
      Permutation w = nodes[pos].conjugator * gens[gi];
      if (keyable) index.emplace(subgroup_element_keys(g, moved, kKeyableSize), nodes.size());
      nodes.push_back(Node{std::move(moved), std::move(w)});
    }
  }

  std::uint64_t target = g.order() / nodes.size();
  std::vector<Permutation> ngens = h.generators();
  StabChain partial(g.degree());
  for (const Permutation& p : ngens) partial.insert_generator(p);
  for (size_t k = 0; k < cycle_edges.size() && partial.order() < target; ++k) {
    auto [node, gi] = cycle_edges[k];
    Permutation u = nodes[node].conjugator * gens[gi];
    // Find the endpoint node of this edge.
    PermGroup moved = conjugate_subgroup(nodes[node].group, gens[gi]);
    size_t end = nodes.size();
    if (keyable) {
      end = index.at(subgroup_element_keys(g, moved, kKeyableSize));
    } else {
      for (size_t j = 0; j < nodes.size(); ++j)
        if (nodes[j].group.contains_subgroup(moved)) {
          end = j;
          break;
        }
    }
    Permutation s = u * nodes[end].conjugator.inverse();
    if (s.is_identity() || partial.contains(s)) continue;
    partial.insert_generator(s);
    ngens.push_back(std::move(s));
  }
  return PermGroup(g.degree(), std::move(ngens), target);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed,
                         const Limits& limits) {
  (void)limits;
  StabChain acc(g.degree());
  std::vector<Permutation> ngens;
  std::vector<Permutation> queue;
  for (const Permutation& s : seed) {
    if (s.is_identity() || acc.contains(s)) continue;
    acc.insert_generator(s);
    ngens.push_back(s);
    queue.push_back(s);
  }
  for (size_t pos = 0; pos < queue.size(); ++pos) {
    for (const Permutation& t : g.generators()) {
      Permutation y = queue[pos].conjugated_by(t);
      if (acc.contains(y)) continue;
      acc.insert_generator(y);
      ngens.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  return PermGroup(g.degree(), std::move(ngens));
}

PermGroup derived_subgroup(const PermGroup& g, const Limits& limits) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms, limits);
}

namespace {

// Deterministic p-element seed: maximal p-part order over the pool of
// strong generators, falling back to the element stream.
Permutation sylow_seed(const PermGroup& g, unsigned p, const Limits& limits) {
  Permutation best = g.identity();
  std::uint64_t best_order = 1;
  for (const Permutation& s : g.chain().strong_generators()) {
    std::uint64_t o = s.order();
    std::uint64_t pp = p_part(o, p);
    if (pp == 1) continue;
    Permutation cand = s.power(static_cast<long long>(o / pp));
    if (pp > best_order || (pp == best_order && cand < best)) {
      best = cand;
      best_order = pp;
    }
  }
  if (best_order > 1) return best;
  g.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    std::uint64_t o = x.order();
    std::uint64_t pp = p_part(o, p);
    if (pp == 1) return true;
    best = x.power(static_cast<long long>(o / pp));
    best_order = pp;
    return false;
  });
  if (best_order == 1) throw Precondition("no p-element found"); // unreachable if p | |G|
  return best;
}

} // namespace

PermGroup sylow_subgroup(const PermGroup& g, unsigned p, const Limits& limits) {
  std::uint64_t full = p_part(g.order(), p);
  if (full == 1) return PermGroup::trivial(g.degree());

  // Work down the chain while the stabilizer keeps the whole p-part.
  if (!g.chain().levels().empty()) {
    PermGroup stab = g.stabilizer_subgroup(1);
    if (p_part(stab.order(), p) == full) return sylow_subgroup(stab, p, limits);
  }

  Permutation seed = sylow_seed(g, p, limits);
  PermGroup part(g.degree(), {seed}, seed.order());
  while (part.order() < full) {
    PermGroup norm = normalizer(g, part, limits);
    Permutation next = g.identity();
    bool found = false;
    norm.for_each_element(limits.max_enumeration, [&](const Permutation& y) {
      std::uint64_t o = y.order();
      std::uint64_t pp = p_part(o, p);
      if (pp == 1) return true;
      Permutation cand = y.power(static_cast<long long>(o / pp));
      if (part.contains(cand)) return true;
      next = std::move(cand);
      found = true;
      return false;
    });
    if (!found)
      throw Precondition("normalizer ascent stalled"); // impossible below a Sylow
    // |<P, y>| = |P| * order of y modulo P.
    std::uint64_t step = 1;
    Permutation pw = next;
    while (!part.contains(pw)) {
      pw = pw.power(static_cast<long long>(p));
      step *= p;
    }
    std::vector<Permutation> gens = part.generators();
    gens.push_back(next);
    part = PermGroup(g.degree(), std::move(gens), part.order() * step);
  }
  return part;
}

PermGroup intersect_subgroups(const PermGroup& a, const PermGroup& b,
                              const Limits& limits) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> members;
  small.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if (large.contains(x)) members.push_back(x);
    return true;
  });
  std::uint64_t count = members.size();
  return PermGroup(small.degree(), std::move(members), count);
}

PermGroup p_core(const PermGroup& g, unsigned p, const Limits& limits) {
  PermGroup core = sylow_subgroup(g, p, limits);
  while (core.order() > 1) {
    bool stable = true;
    for (const Permutation& t : g.generators()) {
      PermGroup moved = conjugate_subgroup(core, t);
      if (core.contains_subgroup(moved)) continue;
      core = intersect_subgroups(core, moved, limits);
      stable = false;
      break;
    }
    if (stable) break;
  }
  return core;
}

PermGroup fitting_subgroup(const PermGroup& g, const Limits& limits) {
  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (unsigned p : prime_divisors(g.order())) {
    PermGroup op = p_core(g, p, limits);
    order *= op.order();
    for (const Permutation& x : op.generators()) gens.push_back(x);
  }
  return PermGroup(g.degree(), std::move(gens), order);
}

bool is_nilpotent(const PermGroup& g, const Limits& limits) {
  for (unsigned p : prime_divisors(g.order()))
    if (!is_normal(g, sylow_subgroup(g, p, limits))) return false;
  return true;
}

bool is_soluble(const PermGroup& g, const Limits& limits) {
  PermGroup cur = g;
  while (cur.order() > 1) {
    PermGroup f = fitting_subgroup(cur, limits);
    if (f.order() == 1) return false;
    if (f.order() == cur.order()) return true;
    cur = coset_action(cur, f, limits).first;
  }
  return true;
}

unsigned fitting_height(const PermGroup& g, const Limits& limits) {
  unsigned height = 0;
  PermGroup cur = g;
  while (cur.order() > 1) {
    PermGroup f = fitting_subgroup(cur, limits);
    if (f.order() == 1)
      throw Precondition("fitting_height needs a soluble group");
    ++height;
    if (f.order() == cur.order()) break;
    cur = coset_action(cur, f, limits).first;
  }
  return height;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, const Limits& limits) {
  std::vector<PermGroup> closures;
  for (const auto& cls : conjugacy_classes(g, limits)) {
    if (cls.representative.is_identity()) continue;
    PermGroup n = normal_closure(g, {cls.representative}, limits);
    bool dup = false;
    for (const PermGroup& other : closures)
      if (other.order() == n.order() && other.contains_subgroup(n)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(n));
  }
  std::vector<PermGroup> minimal;
  for (const PermGroup& n : closures) {
    bool is_min = true;
    for (const PermGroup& other : closures) {
      if (other.order() < n.order() && n.contains_subgroup(other)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(n);
  }
  return minimal;
}

PermGroup socle(const PermGroup& g, const Limits& limits) {
  std::vector<Permutation> gens;
  for (const PermGroup& m : minimal_normal_subgroups(g, limits))
    for (const Permutation& x : m.generators()) gens.push_back(x);
  return PermGroup(g.degree(), std::move(gens));
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, const Limits& limits) {
  if (g.order() > limits.subgroup_scan_bound)
    throw BoundExceeded("normal-subgroup scan limited to order " +
                        std::to_string(limits.subgroup_scan_bound));
  std::vector<PermGroup> principal;
  for (const auto& cls : conjugacy_classes(g, limits)) {
    if (cls.representative.is_identity()) continue;
    principal.push_back(normal_closure(g, {cls.representative}, limits));
  }
  std::vector<PermGroup> normals{PermGroup::trivial(g.degree())};
  std::unordered_map<std::vector<unsigned>, bool, KeyHash> seen;
  seen.emplace(subgroup_element_keys(g, normals[0], limits.subgroup_scan_bound), true);
  for (size_t pos = 0; pos < normals.size(); ++pos) {
    for (const PermGroup& p : principal) {
      std::vector<Permutation> gens = normals[pos].generators();
      gens.insert(gens.end(), p.generators().begin(), p.generators().end());
      PermGroup join(g.degree(), std::move(gens));
      auto key = subgroup_element_keys(g, join, limits.subgroup_scan_bound);
      if (seen.emplace(std::move(key), true).second) normals.push_back(std::move(join));
    }
  }
  std::sort(normals.begin(), normals.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return normals;
}

std::vector<SylowConfinedRep> sylow_confined_class_reps(const PermGroup& g, unsigned p,
                                                        bool only_prime_order,
                                                        const Limits& limits) {
  std::vector<SylowConfinedRep> reps;
  PermGroup syl = sylow_subgroup(g, p, limits);
  if (syl.order() == 1) return reps;
  KeySet seen;
  syl.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if (x.is_identity()) return true;
    if (only_prime_order && x.order() != p) return true;
    auto key = g.element_key(x);
    if (seen.count(key)) return true;
    ConjugationOrbit orbit(g, g, x, limits.max_enumeration);
    for (const auto& k : orbit.node_keys()) seen.insert(k);
    reps.push_back(SylowConfinedRep{x, p, orbit.size()});
    return true;
  });
  return reps;
}

} // namespace cng
