#include "cng/recognition.hpp"

#include <algorithm>

namespace cng {

bool is_cyclic(const PermGroup& g, const Limits& limits) {
  if (g.order() == 1) return true;
  bool cyclic = false;
  g.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if (x.order() == g.order()) {
      cyclic = true;
      return false;
    }
    return true;
  });
  return cyclic;
}

bool is_generalized_quaternion(const PermGroup& g, const Limits& limits) {
  std::uint64_t n = g.order();
  if (n < 8 || !is_p_group_order(n, 2)) return false;
  std::uint64_t involutions = 0;
  std::uint64_t max_order = 1;
  g.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    std::uint64_t o = x.order();
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
    return true;
  });
  return involutions == 1 && max_order < n;
}

std::optional<CyclicOddTimesQuaternion> decompose_cyclic_odd_times_quaternion(
    const PermGroup& g, const Limits& limits) {
  if (!is_nilpotent(g, limits)) return std::nullopt;
  std::vector<Permutation> odd_gens;
  std::uint64_t odd_order = 1;
  for (unsigned p : prime_divisors(g.order())) {
    if (p == 2) continue;
    PermGroup syl = sylow_subgroup(g, p, limits);
    if (!is_cyclic(syl, limits)) return std::nullopt;
    odd_order *= syl.order();
    for (const Permutation& x : syl.generators()) odd_gens.push_back(x);
  }
  PermGroup odd(g.degree(), std::move(odd_gens), odd_order);
  PermGroup syl2 = sylow_subgroup(g, 2, limits);
  if (!is_generalized_quaternion(syl2, limits)) return std::nullopt;
  return CyclicOddTimesQuaternion{std::move(odd), std::move(syl2)};
}

namespace {

bool frobenius_pair_valid(const PermGroup& g, const PermGroup& kernel,
                          const PermGroup& complement, const Limits& limits) {
  if (complement.order() <= 1) return false;
  if (kernel.order() * complement.order() != g.order()) return false;
  if (intersect_subgroups(kernel, complement, limits).order() != 1) return false;
  bool ok = true;
  complement.for_each_element(limits.max_enumeration, [&](const Permutation& h) {
    if (h.is_identity()) return true;
    kernel.for_each_element(limits.max_enumeration, [&](const Permutation& k) {
      if (k.is_identity()) return true;
      if (k.conjugated_by(h) == k) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  });
  return ok;
}

// Complement candidates of order h: point stabilizers, cyclic subgroups,
// and two-generated subgroups grown from class representatives.
std::vector<PermGroup> complement_candidates(const PermGroup& g, std::uint64_t h,
                                             const Limits& limits) {
  std::vector<PermGroup> cands;
  for (unsigned pt = 0; pt < g.degree(); ++pt) {
    PermGroup stab = point_stabilizer(g, pt);
    if (stab.order() == h) cands.push_back(std::move(stab));
  }
  std::vector<Permutation> elems = g.elements(limits.max_enumeration);
  for (const Permutation& x : elems)
    if (x.order() == h) {
      cands.push_back(PermGroup(g.degree(), {x}, h));
      break; // cyclic candidates of one class suffice rarely; keep a few below
    }
  for (const auto& cls : conjugacy_classes(g, limits)) {
    const Permutation& x = cls.representative;
    if (x.is_identity()) continue;
    if (h % x.order() != 0) continue;
    if (x.order() == h) cands.push_back(PermGroup(g.degree(), {x}, h));
    for (const Permutation& y : elems) {
      if (y.is_identity() || h % y.order() != 0) continue;
      PermGroup two(g.degree(), {x, y});
      if (two.order() == h) {
        cands.push_back(std::move(two));
        break;
      }
    }
  }
  for (unsigned p : prime_divisors(g.order()))
    if (p_part(g.order(), p) == h) {
      cands.push_back(sylow_subgroup(g, p, limits));
      break;
    }
  return cands;
}

} // namespace

std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g,
                                                      const Limits& limits) {
  if (g.order() == 1) return std::nullopt;
  std::vector<PermGroup> kernels;
  if (g.order() <= limits.subgroup_scan_bound) {
    kernels = normal_subgroups(g, limits);
  } else {
    PermGroup f = fitting_subgroup(g, limits);
    for (unsigned p : prime_divisors(f.order())) kernels.push_back(p_core(g, p, limits));
    kernels.push_back(std::move(f));
  }
  for (const PermGroup& n : kernels) {
    if (n.order() <= 1 || n.order() == g.order()) continue;
    std::uint64_t h = g.order() / n.order();
    for (const PermGroup& cand : complement_candidates(g, h, limits)) {
      if (frobenius_pair_valid(g, n, cand, limits))
        return FrobeniusStructure{n, cand};
    }
  }
  return std::nullopt;
}

bool is_simple(const PermGroup& g, const Limits& limits) {
  if (g.order() == 1) return false;
  for (const auto& cls : conjugacy_classes(g, limits)) {
    if (cls.representative.is_identity()) continue;
    PermGroup n = normal_closure(g, {cls.representative}, limits);
    if (n.order() != g.order()) return false;
  }
  return true;
}

bool is_almost_simple(const PermGroup& g, const Limits& limits) {
  PermGroup s = socle(g, limits);
  if (s.order() == 1 || !is_simple(s, limits)) return false;
  // Nonabelian simple socle: rule out abelian (prime-order) socle.
  if (prime_divisors(s.order()).size() == 1 && is_cyclic(s, limits)) return false;
  return centralizer_subgroup(g, s, limits).order() == 1;
}

bool is_sl23(const PermGroup& g, const Limits& limits) {
  if (g.order() != 24) return false;
  if (is_nilpotent(g, limits)) return false;
  PermGroup syl2 = sylow_subgroup(g, 2, limits);
  return is_normal(g, syl2) && is_generalized_quaternion(syl2, limits);
}

std::optional<DihedralFrobeniusWitness> find_dihedral_frobenius(const PermGroup& g,
                                                                const Limits& limits) {
  std::vector<Permutation> involutions;
  for (const auto& rep : sylow_confined_class_reps(g, 2, true, limits))
    involutions.push_back(rep.element);
  std::optional<DihedralFrobeniusWitness> found;
  for (const Permutation& a : involutions) {
    g.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
      Permutation c = x.inverse() * a * x * a; // [x, a], using a = a^-1
      std::uint64_t o = c.order();
      if (o > 1 && o % 2 == 1) {
        found = DihedralFrobeniusWitness{a, c};
        return false;
      }
      return true;
    });
    if (found) break;
  }
  return found;
}

namespace {

// Irredundant generating sequence: skip generators already generated.
std::vector<Permutation> irredundant_generators(const PermGroup& g) {
  std::vector<Permutation> out;
  StabChain acc(g.degree());
  for (const Permutation& x : g.generators()) {
    if (x.is_identity() || acc.contains(x)) continue;
    acc.insert_generator(x);
    out.push_back(x);
  }
  return out;
}

} // namespace

bool isomorphic_backtrack(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  if (a.order() != b.order()) return false;
  if (a.order() == 1) return true;
  std::vector<Permutation> agens = irredundant_generators(a);
  std::vector<Permutation> belems = b.elements(limits.max_enumeration);
  PermGroup adom(a.degree(), agens, a.order());

  std::vector<Permutation> images(agens.size(), b.identity());
  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == agens.size()) {
      try {
        GroupHom h = GroupHom::by_images(adom, b, images);
        return h.image().order() == b.order();
      } catch (const NotHomomorphism&) {
        return false;
      }
    }
    std::uint64_t want = agens[i].order();
    for (const Permutation& y : belems) {
      if (y.order() != want) continue;
      images[i] = y;
      if (place(i + 1)) return true;
    }
    return false;
  };
  return place(0);
}

} // namespace cng
