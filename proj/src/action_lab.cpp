#include "cng/action_lab.hpp"

#include "cng/constructors.hpp"
#include "cng/recognition.hpp"
#include "cng/standard_groups.hpp"

#include <algorithm>

namespace cng {

ActionInstance make_instance(PermGroup ambient, PermGroup target, PermGroup actors) {
  if (!ambient.contains_subgroup(target) || !ambient.contains_subgroup(actors))
    throw Precondition("instance parts must lie in the ambient group");
  if (!is_normal(ambient, target))
    throw Precondition("target must be normal in the ambient group");
  if (target.order() * actors.order() != ambient.order())
    throw Precondition("ambient must factor as target * actors");
  if (intersect_subgroups(target, actors).order() != 1)
    throw Precondition("target and actors must meet trivially");
  return ActionInstance{std::move(ambient), std::move(target), std::move(actors)};
}

ActionInstance instance_from_action(const MatrixAction& action, const PermGroup& k,
                                    const Limits& limits) {
  PermGroup ambient = semidirect(action, k, limits);
  unsigned points = ambient.degree();
  std::vector<Permutation> translations;
  std::uint64_t module_order = 1;
  for (unsigned i = 0; i < action.dim; ++i) {
    std::vector<unsigned> e(action.dim, 0);
    e[i] = 1 % action.modulus;
    translations.push_back(translation_perm(action.dim, action.modulus, e));
    module_order *= action.modulus;
  }
  PermGroup target(points, std::move(translations), module_order);
  std::vector<Permutation> mat_perms;
  for (const Mat& m : action.matrices) mat_perms.push_back(matrix_perm(m));
  PermGroup actors(points, std::move(mat_perms), ambient.order() / module_order);
  return make_instance(std::move(ambient), std::move(target), std::move(actors));
}

PermGroup commutator_span(const ActionInstance& inst, const Limits& limits) {
  std::vector<Permutation> seeds;
  for (const Permutation& g : inst.target.generators())
    for (const Permutation& a : inst.actors.generators())
      seeds.push_back(g.inverse() * a.inverse() * g * a);
  PermGroup span = normal_closure(inst.ambient, seeds, limits);
  if (!inst.target.contains_subgroup(span))
    throw Precondition("commutator span escaped the target");
  return span;
}

PermGroup actor_fixed_points(const ActionInstance& inst, const Limits& limits) {
  PermGroup c = inst.target;
  for (const Permutation& a : inst.actors.generators()) {
    if (a.is_identity()) continue;
    c = centralizer_in(inst.ambient, c, a, limits);
  }
  return c;
}

namespace {

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

bool subgroup_equal(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains_subgroup(b);
}

// Induced automorphism order: least e >= 1 with a^e centralizing the target.
std::uint64_t induced_automorphism_order(const ActionInstance& inst,
                                         const Permutation& a) {
  std::uint64_t o = a.order();
  for (std::uint64_t e = 1; e <= o; ++e) {
    if (o % e != 0) continue;
    Permutation p = a.power(static_cast<long long>(e));
    bool central = true;
    for (const Permutation& g : inst.target.generators())
      if (g.conjugated_by(p) != g) {
        central = false;
        break;
      }
    if (central) return e;
  }
  return o;
}

} // namespace

CheckResult check_coprime_lemma(const ActionInstance& inst, const Limits& limits) {
  if (!coprime(inst.target.order(), inst.actors.order()))
    return {CheckStatus::Inapplicable, "orders are not coprime"};

  PermGroup span = commutator_span(inst, limits);
  PermGroup fixed = actor_fixed_points(inst, limits);

  // (i) G = [G,A] C_G(A); the span is normal, so the product is a group.
  {
    std::vector<Permutation> gens = span.generators();
    gens.insert(gens.end(), fixed.generators().begin(), fixed.generators().end());
    PermGroup product(inst.ambient.degree(), std::move(gens));
    if (!subgroup_equal(product, inst.target))
      return {CheckStatus::Counterexample, "(i) [G,A] C_G(A) != G"};
  }

  // (ii) [G,A,A] = [G,A].
  {
    std::vector<Permutation> seeds;
    for (const Permutation& g : span.generators())
      for (const Permutation& a : inst.actors.generators())
        seeds.push_back(g.inverse() * a.inverse() * g * a);
    PermGroup span2 = normal_closure(inst.ambient, seeds, limits);
    if (!subgroup_equal(span2, span))
      return {CheckStatus::Counterexample, "(ii) [G,A,A] != [G,A]"};
  }

  // (iii) C_{G/N}(A) = C_G(A) N / N for every A-invariant normal N.
  for (const PermGroup& n : normal_subgroups(inst.target, limits)) {
    bool invariant = true;
    for (const Permutation& a : inst.actors.generators())
      for (const Permutation& x : n.generators())
        if (!n.contains(x.conjugated_by(a))) {
          invariant = false;
          break;
        }
    if (!invariant) continue;
    auto [quot, proj] = coset_action(inst.ambient, n, limits);
    (void)quot;
    PermGroup target_image = proj.apply_subgroup(inst.target);
    PermGroup actor_image = proj.apply_subgroup(inst.actors);
    PermGroup quotient_fixed = target_image;
    for (const Permutation& a : actor_image.generators()) {
      if (a.is_identity()) continue;
      quotient_fixed = centralizer_in(proj.image(), quotient_fixed, a, limits);
    }
    PermGroup fixed_image = proj.apply_subgroup(fixed);
    // C_G(A) N / N: join the image of C_G(A) with nothing (N maps to 1).
    if (!subgroup_equal(quotient_fixed, fixed_image))
      return {CheckStatus::Counterexample,
              "(iii) fixed points do not lift through N of order " +
                  std::to_string(n.order())};
  }

  // (iv) nilpotent G, noncyclic abelian A: G = prod of C_G(a).
  bool abelian = true;
  for (const Permutation& x : inst.actors.generators())
    for (const Permutation& y : inst.actors.generators())
      if (x * y != y * x) abelian = false;
  if (abelian && !is_cyclic(inst.actors, limits) && is_nilpotent(inst.target, limits)) {
    KeySet product;
    std::vector<Permutation> frontier{inst.ambient.identity()};
    product.insert(inst.ambient.element_key(frontier[0]));
    bool first = true;
    std::vector<Permutation> nontrivial;
    inst.actors.for_each_element(limits.max_enumeration, [&](const Permutation& a) {
      if (!a.is_identity()) nontrivial.push_back(a);
      return true;
    });
    for (const Permutation& a : nontrivial) {
      PermGroup ca = centralizer_in(inst.ambient, inst.target, a, limits);
      std::vector<Permutation> next_frontier;
      KeySet next;
      std::vector<Permutation> ca_elems = ca.elements(limits.max_enumeration);
      for (const Permutation& s : (first ? std::vector<Permutation>{inst.ambient.identity()}
                                         : frontier))
        for (const Permutation& c : ca_elems) {
          Permutation sc = s * c;
          if (next.insert(inst.ambient.element_key(sc)).second)
            next_frontier.push_back(std::move(sc));
        }
      frontier = std::move(next_frontier);
      product = std::move(next);
      first = false;
    }
    if (product.size() != inst.target.order())
      return {CheckStatus::Counterexample,
              "(iv) centralizer product covers only " + std::to_string(product.size()) +
                  " of " + std::to_string(inst.target.order()) + " elements"};
  }
  return {CheckStatus::Pass, ""};
}

CheckResult check_cyclic_automorphism_lemma(const ActionInstance& inst,
                                            const Limits& limits) {
  if (!coprime(inst.target.order(), inst.actors.order()))
    return {CheckStatus::Inapplicable, "orders are not coprime"};
  if (!is_cyclic(inst.actors, limits))
    return {CheckStatus::Inapplicable, "actors are not cyclic"};
  Permutation a = inst.ambient.identity();
  for (const Permutation& g : inst.actors.generators())
    if (g.order() == inst.actors.order()) a = g;
  if (a.is_identity() && inst.actors.order() > 1)
    return {CheckStatus::Inapplicable, "no generator of full actor order"};
  std::uint64_t alpha = induced_automorphism_order(inst, a);

  std::uint64_t n = inst.target.order();
  auto primes = prime_divisors(n);
  bool cyclic_prime_power = primes.size() == 1 && is_cyclic(inst.target, limits);
  if (cyclic_prime_power && primes[0] == 2) {
    if (alpha != 1)
      return {CheckStatus::Counterexample,
              "(i) nontrivial coprime action on a cyclic 2-group"};
    return {CheckStatus::Pass, ""};
  }
  if (cyclic_prime_power) {
    if (alpha == 1) return {CheckStatus::Pass, ""};
    if (actor_fixed_points(inst, limits).order() != 1)
      return {CheckStatus::Counterexample,
              "(ii) nontrivial action with nontrivial fixed points"};
    return {CheckStatus::Pass, ""};
  }
  if (is_generalized_quaternion(inst.target, limits)) {
    if (alpha == 1) return {CheckStatus::Pass, ""};
    if (alpha == 3 && inst.target.order() == 8) return {CheckStatus::Pass, ""};
    return {CheckStatus::Counterexample,
            "(iii) coprime action of order " + std::to_string(alpha) +
                " on a generalized quaternion group of order " +
                std::to_string(inst.target.order())};
  }
  return {CheckStatus::Inapplicable,
          "target is neither cyclic of prime-power order nor generalized quaternion"};
}

CheckResult check_rank_expo(const ActionInstance& inst, const Limits& limits) {
  auto primes = prime_divisors(inst.actors.order());
  if (primes.size() != 1 || inst.actors.order() != std::uint64_t(primes[0]) * primes[0] ||
      is_cyclic(inst.actors, limits))
    return {CheckStatus::Inapplicable, "actors are not noncyclic of order p^2"};
  bool abelian = true;
  for (const Permutation& x : inst.target.generators())
    for (const Permutation& y : inst.target.generators())
      if (x * y != y * x) abelian = false;
  if (!abelian) return {CheckStatus::Inapplicable, "target is not abelian"};
  unsigned p = primes[0];

  // pG is generated by the p-th powers of the generators (G abelian).
  std::vector<Permutation> pgens;
  for (const Permutation& g : inst.target.generators())
    pgens.push_back(g.power(p));
  PermGroup pg(inst.ambient.degree(), std::move(pgens));

  std::vector<Permutation> sum_gens;
  bool ok = true;
  inst.actors.for_each_element(limits.max_enumeration, [&](const Permutation& a) {
    if (a.is_identity()) return true;
    PermGroup ca = centralizer_in(inst.ambient, inst.target, a, limits);
    for (const Permutation& c : ca.generators()) sum_gens.push_back(c);
    return true;
  });
  PermGroup sum(inst.ambient.degree(), std::move(sum_gens));
  for (const Permutation& g : pg.generators())
    if (!sum.contains(g)) ok = false;
  if (!ok)
    return {CheckStatus::Counterexample, "pG is not inside the centralizer span"};
  return {CheckStatus::Pass, ""};
}

CheckResult check_frobenius_generation(const ActionInstance& inst, const Limits& limits) {
  auto fs = frobenius_structure(inst.actors, limits);
  if (!fs) return {CheckStatus::Inapplicable, "actors are not a Frobenius group"};
  if (!coprime(inst.target.order(), fs->kernel.order()))
    return {CheckStatus::Inapplicable, "target order shares a prime with the kernel"};
  // C_G(F) = 1 is a hypothesis.
  PermGroup cf = inst.target;
  for (const Permutation& f : fs->kernel.generators()) {
    if (f.is_identity()) continue;
    cf = centralizer_in(inst.ambient, cf, f, limits);
  }
  if (cf.order() != 1)
    return {CheckStatus::Inapplicable, "kernel has fixed points on the target"};

  PermGroup ch = inst.target;
  for (const Permutation& h : fs->complement.generators()) {
    if (h.is_identity()) continue;
    ch = centralizer_in(inst.ambient, ch, h, limits);
  }
  std::vector<Permutation> gens;
  fs->kernel.for_each_element(limits.max_enumeration, [&](const Permutation& f) {
    for (const Permutation& c : ch.generators()) gens.push_back(c.conjugated_by(f));
    return true;
  });
  PermGroup generated(inst.ambient.degree(), std::move(gens));
  if (!subgroup_equal(generated, inst.target))
    return {CheckStatus::Counterexample,
            "<C_G(H)^f> has order " + std::to_string(generated.order()) +
                " instead of " + std::to_string(inst.target.order())};
  return {CheckStatus::Pass, ""};
}

CheckResult check_fpf_nilpotent(const ActionInstance& inst, const Limits& limits) {
  auto primes = prime_divisors(inst.actors.order());
  if (primes.size() != 1 || inst.actors.order() != primes[0])
    return {CheckStatus::Inapplicable, "actors are not of prime order"};
  if (inst.target.order() % primes[0] == 0)
    return {CheckStatus::Inapplicable, "actor order divides the target order"};
  if (actor_fixed_points(inst, limits).order() != 1)
    return {CheckStatus::Inapplicable, "action has fixed points"};
  if (!is_nilpotent(inst.target, limits))
    return {CheckStatus::Counterexample,
            "fixed-point-free prime-order action on a non-nilpotent group"};
  return {CheckStatus::Pass, ""};
}

bool is_splitting(const ActionInstance& inst, const Limits& limits) {
  auto primes = prime_divisors(inst.actors.order());
  if (primes.size() != 1 || inst.actors.order() != primes[0])
    throw Precondition("splitting test needs actors of prime order");
  unsigned p = primes[0];
  Permutation a = inst.actors.generators().front();
  for (const Permutation& g : inst.actors.generators())
    if (!g.is_identity()) a = g;
  bool split = true;
  inst.target.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    Permutation cur = x;
    Permutation prod = x;
    for (unsigned i = 1; i < p; ++i) {
      cur = cur.conjugated_by(a);
      prod = prod * cur;
    }
    if (!prod.is_identity()) {
      split = false;
      return false;
    }
    return true;
  });
  return split;
}

CheckResult splitting_consistency(const ActionInstance& inst, const Limits& limits) {
  auto primes = prime_divisors(inst.actors.order());
  if (primes.size() != 1 || inst.actors.order() != primes[0])
    return {CheckStatus::Inapplicable, "actors are not of prime order"};
  unsigned p = primes[0];
  Permutation a = inst.actors.generators().front();
  for (const Permutation& g : inst.actors.generators())
    if (!g.is_identity()) a = g;
  bool by_product = is_splitting(inst, limits);
  bool by_orders = true;
  inst.target.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if ((x * a).order() != p) {
      by_orders = false;
      return false;
    }
    return true;
  });
  if (by_product != by_orders)
    return {CheckStatus::Counterexample,
            "product identity and semidirect order disagree"};
  return {CheckStatus::Pass, ""};
}

ActionInstance heisenberg7_instance() {
  // Points (x, y, z) over Z/7 with product
  // (x,y,z)(a,b,c) = (x+a, y+b, z+c+x*b); right multiplications give the
  // regular representation.
  constexpr unsigned q = 7;
  constexpr unsigned points = q * q * q;
  auto idx = [&](unsigned x, unsigned y, unsigned z) { return x + q * y + q * q * z; };
  auto right_mult = [&](unsigned a, unsigned b, unsigned c) {
    std::vector<unsigned> images(points);
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y)
        for (unsigned z = 0; z < q; ++z)
          images[idx(x, y, z)] = idx((x + a) % q, (y + b) % q, (z + c + x * b) % q);
    return Permutation(std::move(images));
  };
  std::vector<unsigned> phi(points);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y)
      for (unsigned z = 0; z < q; ++z)
        phi[idx(x, y, z)] = idx(2 * x % q, 2 * y % q, 4 * z % q);
  Permutation aut(std::move(phi));

  PermGroup target(points, {right_mult(1, 0, 0), right_mult(0, 1, 0), right_mult(0, 0, 1)},
                   points);
  PermGroup actors(points, {aut}, 3);
  std::vector<Permutation> all = target.generators();
  all.push_back(aut);
  PermGroup ambient(points, std::move(all), std::uint64_t(points) * 3);
  return make_instance(std::move(ambient), std::move(target), std::move(actors));
}

// ---- suite generation -------------------------------------------------------

std::string to_string(SuiteKind k) {
  switch (k) {
    case SuiteKind::Coprime: return "coprime_action";
    case SuiteKind::CyclicAutomorphism: return "cyclic_automorphism";
    case SuiteKind::RankExponent: return "rank_exponent";
    case SuiteKind::FrobeniusGeneration: return "frobenius_generation";
    case SuiteKind::FpfNilpotent: return "fpf_nilpotent";
    case SuiteKind::Splitting: return "splitting";
  }
  return "?";
}

namespace {

Mat scalar_matrix(unsigned dim, unsigned modulus, unsigned value) {
  Mat m = Mat::zero(dim, modulus);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = value % modulus;
  return m;
}

// Multiplicative order of a mod n (assumes gcd(a, n) = 1).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n;
  std::uint64_t e = 1;
  while (x != 1) {
    x = x * a % n;
    ++e;
  }
  return e;
}

NamedInstance inversion_instance(unsigned n, const Limits& limits) {
  MatrixAction action{1, n, {scalar_matrix(1, n, n - 1)}};
  return {"inversion_on_C" + std::to_string(n),
          instance_from_action(action, cyclic_group(2), limits)};
}

NamedInstance mult_root_instance(unsigned n, unsigned root, const Limits& limits) {
  std::uint64_t k = mult_order(root, n);
  MatrixAction action{1, n, {scalar_matrix(1, n, root)}};
  return {"mult_by_" + std::to_string(root) + "_on_C" + std::to_string(n),
          instance_from_action(action, cyclic_group(static_cast<unsigned>(k)), limits)};
}

NamedInstance v4_coordinate_instance(unsigned q, const Limits& limits) {
  PermGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  Mat a = scalar_matrix(2, q, 1);
  a.at(0, 0) = q - 1;
  Mat b = scalar_matrix(2, q, 1);
  b.at(1, 1) = q - 1;
  MatrixAction action{2, q, {a, b}};
  return {"V4_coordinate_inversions_mod" + std::to_string(q),
          instance_from_action(action, v4, limits)};
}

NamedInstance swap_instance(unsigned q, const Limits& limits) {
  Mat s = Mat::zero(2, q);
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  MatrixAction action{2, q, {s}};
  return {"swap_on_C" + std::to_string(q) + "_squared",
          instance_from_action(action, cyclic_group(2), limits)};
}

NamedInstance s3_plane_instance(unsigned p, const Limits& limits) {
  PermGroup s3 = symmetric_group(3); // generators (0 1), (0 1 2)
  Mat t = Mat::zero(2, p);
  t.at(0, 1) = 1;
  t.at(1, 0) = 1;
  Mat c = Mat::zero(2, p);
  c.at(0, 1) = 1;
  c.at(1, 0) = p - 1;
  c.at(1, 1) = p - 1;
  MatrixAction action{2, p, {t, c}};
  return {"S3_on_plane_mod" + std::to_string(p),
          instance_from_action(action, s3, limits)};
}

NamedInstance diagonal_c3_instance(unsigned p, const Limits& limits) {
  // Least cube root of unity != 1 mod p (needs p = 1 mod 3).
  unsigned w = 0;
  for (unsigned cand = 2; cand < p; ++cand)
    if (std::uint64_t(cand) * cand % p * cand % p == 1) {
      w = cand;
      break;
    }
  Mat m = Mat::zero(2, p);
  m.at(0, 0) = w;
  m.at(1, 1) = static_cast<unsigned>(std::uint64_t(w) * w % p);
  MatrixAction action{2, p, {m}};
  return {"diagonal_C3_mod" + std::to_string(p),
          instance_from_action(action, cyclic_group(3), limits)};
}

// Trivial actions cannot ride the semidirect container (the matrix images
// collapse); use a direct product with the actors as the right factor.
ActionInstance trivial_action_container(const PermGroup& target_small,
                                        const PermGroup& actors_small) {
  PermGroup ambient = direct_product(target_small, actors_small);
  unsigned total = ambient.degree();
  std::vector<Permutation> tgens;
  for (const Permutation& g : target_small.generators())
    tgens.push_back(embed_left(g, total));
  std::vector<Permutation> agens;
  for (const Permutation& g : actors_small.generators())
    agens.push_back(embed_right(g, total, target_small.degree()));
  PermGroup target(total, std::move(tgens), target_small.order());
  PermGroup actors(total, std::move(agens), actors_small.order());
  return make_instance(std::move(ambient), std::move(target), std::move(actors));
}

NamedInstance trivial_on_cyclic_instance(unsigned n, unsigned k, const Limits& limits) {
  (void)limits;
  return {"trivial_C" + std::to_string(k) + "_on_C" + std::to_string(n),
          trivial_action_container(cyclic_group(n), cyclic_group(k))};
}

NamedInstance q8_rotation_instance(const Limits& limits) {
  // Q8 with the order-3 rotation, inside the regular representation of
  // the unit quaternions.
  (void)limits;
  const auto& units = hurwitz_units();
  auto left_mult = [&](const Quaternion& q) {
    std::vector<unsigned> images(units.size());
    for (size_t i = 0; i < units.size(); ++i)
      images[i] = static_cast<unsigned>(hurwitz_unit_index(quat_mul(q, units[i])));
    return Permutation(std::move(images));
  };
  Permutation li = left_mult(Quaternion{0, 2, 0, 0});
  Permutation lj = left_mult(Quaternion{0, 0, 2, 0});
  Permutation lw = left_mult(Quaternion{-1, 1, 1, 1});
  PermGroup ambient(24, {li, lj, lw}, 24);
  PermGroup target(24, {li, lj}, 8);
  PermGroup actors(24, {lw}, 3);
  return {"Q8_with_order3_rotation",
          make_instance(std::move(ambient), std::move(target), std::move(actors))};
}

NamedInstance quaternion_trivial_instance(unsigned m, unsigned k, const Limits& limits) {
  (void)limits;
  PermGroup dic = dicyclic_group(m);
  PermGroup ck = cyclic_group(k);
  PermGroup ambient = direct_product(dic, ck);
  unsigned total = ambient.degree();
  std::vector<Permutation> tgens;
  for (const Permutation& g : dic.generators()) tgens.push_back(embed_left(g, total));
  std::vector<Permutation> agens;
  for (const Permutation& g : ck.generators())
    agens.push_back(embed_right(g, total, dic.degree()));
  PermGroup target(total, std::move(tgens), dic.order());
  PermGroup actors(total, std::move(agens), ck.order());
  return {"Q" + std::to_string(4 * m) + "_times_C" + std::to_string(k),
          make_instance(std::move(ambient), std::move(target), std::move(actors))};
}

NamedInstance c3_squared_instance(unsigned p, const Limits& limits) {
  unsigned w = 0;
  for (unsigned cand = 2; cand < p; ++cand)
    if (std::uint64_t(cand) * cand % p * cand % p == 1) {
      w = cand;
      break;
    }
  PermGroup c33 = direct_product(cyclic_group(3), cyclic_group(3));
  Mat a = scalar_matrix(2, p, 1);
  a.at(0, 0) = w;
  Mat b = scalar_matrix(2, p, 1);
  b.at(1, 1) = w;
  MatrixAction action{2, p, {a, b}};
  return {"C3xC3_diagonal_mod" + std::to_string(p),
          instance_from_action(action, c33, limits)};
}

} // namespace

std::vector<NamedInstance> suite_instances(SuiteKind kind, std::uint64_t seed,
                                           size_t count, const Limits& limits) {
  std::vector<NamedInstance> pool;
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(kind) << 32));
  auto odd_grid = [](unsigned lo, unsigned hi) {
    std::vector<unsigned> v;
    for (unsigned n = lo; n <= hi; n += 2) v.push_back(n);
    return v;
  };
  auto primes_to = [](unsigned lo, unsigned hi, unsigned avoid) {
    std::vector<unsigned> v;
    for (unsigned n = lo; n <= hi; ++n) {
      if (n % avoid == 0) continue;
      if (prime_divisors(n) == std::vector<unsigned>{n}) v.push_back(n);
    }
    return v;
  };

  switch (kind) {
    case SuiteKind::Coprime: {
      for (unsigned n : odd_grid(3, 99)) pool.push_back(inversion_instance(n, limits));
      for (unsigned p : primes_to(5, 60, 3))
        pool.push_back(s3_plane_instance(p, limits));
      for (unsigned q : odd_grid(3, 13)) pool.push_back(v4_coordinate_instance(q, limits));
      for (unsigned q : odd_grid(3, 21)) pool.push_back(swap_instance(q, limits));
      for (unsigned p : primes_to(7, 61, 2))
        if (p % 3 == 1) pool.push_back(diagonal_c3_instance(p, limits));
      pool.push_back({"heisenberg7_order3", heisenberg7_instance()});
      break;
    }
    case SuiteKind::CyclicAutomorphism: {
      for (unsigned n : {8u, 16u, 32u, 64u})
        for (unsigned k : {3u, 5u, 7u, 9u, 11u, 13u, 15u})
          pool.push_back(trivial_on_cyclic_instance(n, k, limits));
      for (unsigned n : {5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u, 29u, 31u,
                         37u, 41u, 43u, 47u, 49u, 53u})
        for (unsigned root = 2; root < std::min(n, 12u); ++root) {
          if (std::gcd(root, n) != 1) continue;
          std::uint64_t k = mult_order(root, n);
          if (k == 1 || std::gcd<std::uint64_t>(k, n) != 1) continue;
          pool.push_back(mult_root_instance(n, root, limits));
        }
      pool.push_back(q8_rotation_instance(limits));
      for (unsigned m : {4u, 8u})
        for (unsigned k : {3u, 5u})
          pool.push_back(quaternion_trivial_instance(m, k, limits));
      break;
    }
    case SuiteKind::RankExponent: {
      for (unsigned q : odd_grid(3, 99)) pool.push_back(v4_coordinate_instance(q, limits));
      pool.push_back(v4_coordinate_instance(4, limits));
      for (unsigned p : primes_to(7, 43, 2))
        if (p % 3 == 1) pool.push_back(c3_squared_instance(p, limits));
      break;
    }
    case SuiteKind::FrobeniusGeneration: {
      for (unsigned p : primes_to(5, 293, 3)) pool.push_back(s3_plane_instance(p, limits));
      break;
    }
    case SuiteKind::FpfNilpotent: {
      for (unsigned n : odd_grid(3, 151)) pool.push_back(inversion_instance(n, limits));
      for (unsigned n : {7u, 13u, 19u, 31u, 37u, 43u, 49u, 61u, 67u, 73u, 79u, 91u, 97u})
        for (unsigned root = 2; root < 10; ++root) {
          if (std::gcd(root, n) != 1) continue;
          std::uint64_t k = mult_order(root, n);
          auto kp = prime_divisors(k);
          if (kp.size() != 1 || k != kp[0] || n % kp[0] == 0) continue;
          // fixed-point-free scalar action of prime order
          if (std::gcd<unsigned>(static_cast<unsigned>(root) - 1, n) != 1) continue;
          pool.push_back(mult_root_instance(n, root, limits));
        }
      pool.push_back({"heisenberg7_order3", heisenberg7_instance()});
      break;
    }
    case SuiteKind::Splitting: {
      for (unsigned n : odd_grid(3, 121)) pool.push_back(inversion_instance(n, limits));
      pool.push_back(inversion_instance(4, limits));
      for (unsigned n : {7u, 13u, 19u, 31u})
        for (unsigned root : {2u, 3u, 5u}) {
          if (std::gcd(root, n) != 1) continue;
          std::uint64_t k = mult_order(root, n);
          auto kp = prime_divisors(k);
          if (kp.size() == 1 && k == kp[0]) pool.push_back(mult_root_instance(n, root, limits));
        }
      break;
    }
  }

  // Seeded sample without replacement while the pool lasts, then repeats.
  std::vector<NamedInstance> out;
  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) order[i] = i;
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  for (size_t i = 0; i < count; ++i) out.push_back(pool[order[i % order.size()]]);
  return out;
}

CheckResult run_suite_check(SuiteKind kind, const ActionInstance& inst,
                            const Limits& limits) {
  switch (kind) {
    case SuiteKind::Coprime: return check_coprime_lemma(inst, limits);
    case SuiteKind::CyclicAutomorphism: return check_cyclic_automorphism_lemma(inst, limits);
    case SuiteKind::RankExponent: return check_rank_expo(inst, limits);
    case SuiteKind::FrobeniusGeneration: return check_frobenius_generation(inst, limits);
    case SuiteKind::FpfNilpotent: return check_fpf_nilpotent(inst, limits);
    case SuiteKind::Splitting: return splitting_consistency(inst, limits);
  }
  return {CheckStatus::Inapplicable, "unknown suite"};
}

} // namespace cng
