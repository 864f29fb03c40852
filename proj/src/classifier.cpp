#include "cng/classifier.hpp"

#include <algorithm>

namespace cng {

std::string to_string(QuotientCase c) {
  switch (c) {
    case QuotientCase::Cyclic: return "Cyclic";
    case QuotientCase::CyclicOddTimesQuaternion: return "CyclicOddTimesQuaternion";
    case QuotientCase::FrobeniusQuotient: return "FrobeniusQuotient";
    case QuotientCase::SL23: return "SL23";
    case QuotientCase::AlmostSimple: return "AlmostSimple";
    case QuotientCase::NotCN: return "NotCN";
    case QuotientCase::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

std::optional<Permutation> cn_witness(const PermGroup& g, const Limits& limits) {
  // Centralizers that already appeared are recognized by order plus a
  // commutation check against their generators; conjugate representatives
  // produce equal centralizers here only when they literally coincide,
  // which is the common case (abelian normal Sylow subgroups).
  std::vector<std::pair<PermGroup, bool>> memo;
  for (unsigned p : prime_divisors(g.order())) {
    PermGroup syl = sylow_subgroup(g, p, limits);
    KeySet seen;
    std::optional<Permutation> witness;
    syl.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
      if (x.order() != p) return true;
      auto key = g.element_key(x);
      if (seen.count(key)) return true;
      ConjugationOrbit orbit(g, g, x, limits.max_enumeration);
      for (const auto& k : orbit.node_keys()) seen.insert(k);
      std::uint64_t cent_order = g.order() / orbit.size();
      bool nilpotent = false;
      bool resolved = false;
      for (const auto& [grp, nil] : memo) {
        if (grp.order() != cent_order) continue;
        bool commutes = true;
        for (const Permutation& cg : grp.generators())
          if (cg.conjugated_by(x) != cg) {
            commutes = false;
            break;
          }
        if (commutes) {
          nilpotent = nil;
          resolved = true;
          break;
        }
      }
      if (!resolved) {
        PermGroup cent = centralizer_from_orbit(orbit, g.degree(), g.order());
        nilpotent = is_nilpotent(cent, limits);
        memo.emplace_back(std::move(cent), nilpotent);
      }
      if (!nilpotent) {
        witness = x;
        return false;
      }
      return true;
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

namespace {

void push_condition(ClassificationReport& r, const std::string& name, bool pass) {
  r.side_conditions.push_back(SideCondition{name, pass});
}

} // namespace

ClassificationReport classify(const PermGroup& g, const std::string& name,
                              const Limits& limits) {
  ClassificationReport r;
  r.group_name = name;
  r.group_order = g.order();

  std::optional<Permutation> witness = cn_witness(g, limits);
  r.is_cn = !witness.has_value();
  r.cn_witness = witness;

  PermGroup f = fitting_subgroup(g, limits);
  r.fitting_order = f.order();
  r.fitting_primes = prime_divisors(f.order());
  PermGroup quotient = f.order() == g.order() ? PermGroup::trivial(1)
                       : f.order() == 1        ? g
                                               : coset_action(g, f, limits).first;
  r.quotient_order = quotient.order();

  if (!r.is_cn) {
    r.verdict = QuotientCase::NotCN;
    return r;
  }

  if (is_cyclic(quotient, limits)) {
    r.verdict = QuotientCase::Cyclic;
    return r;
  }
  if (decompose_cyclic_odd_times_quaternion(quotient, limits)) {
    r.verdict = QuotientCase::CyclicOddTimesQuaternion;
    return r;
  }
  if (auto frob = frobenius_structure(quotient, limits)) {
    bool kernel_cyclic_odd = frob->kernel.order() % 2 == 1 &&
                             is_cyclic(frob->kernel, limits);
    bool complement_cyclic = is_cyclic(frob->complement, limits);
    if (kernel_cyclic_odd && complement_cyclic) {
      r.verdict = QuotientCase::FrobeniusQuotient;
      r.frobenius_data = FrobeniusData{frob->kernel.order(), frob->complement.order()};
      push_condition(r, "F is a p-group", r.fitting_primes.size() <= 1);
      if (!r.side_conditions.back().pass) r.verdict = QuotientCase::TheoremViolation;
      return r;
    }
  }
  if (is_sl23(quotient, limits)) {
    r.verdict = QuotientCase::SL23;
    push_condition(r, "F is nilpotent", is_nilpotent(f, limits));
    push_condition(r, "|pi(F)| >= 2", r.fitting_primes.size() >= 2);
    push_condition(r, "2 in pi(F)",
                   std::find(r.fitting_primes.begin(), r.fitting_primes.end(), 2u) !=
                       r.fitting_primes.end());
    for (const SideCondition& c : r.side_conditions)
      if (!c.pass) r.verdict = QuotientCase::TheoremViolation;
    return r;
  }
  if (is_almost_simple(quotient, limits)) {
    r.verdict = QuotientCase::AlmostSimple;
    push_condition(r, "F is a 2-group", is_p_group_order(f.order(), 2));
    if (!r.side_conditions.back().pass) r.verdict = QuotientCase::TheoremViolation;
    return r;
  }
  r.verdict = QuotientCase::TheoremViolation;
  return r;
}

SweepResult lemma41_sweep(const PermGroup& g, const Limits& limits,
                          std::optional<bool> known_cn) {
  bool cn = known_cn ? *known_cn : is_cn(g, limits);
  if (!cn) return {SweepStatus::Skipped, "group is not CN"};
  PermGroup f = fitting_subgroup(g, limits);
  std::vector<unsigned> primes = prime_divisors(f.order());
  if (primes.size() < 2) return {SweepStatus::Skipped, "pi(F) has fewer than two primes"};
  for (unsigned p : primes) {
    PermGroup core = p_core(g, p, limits);
    for (const auto& rep : sylow_confined_class_reps(g, p, false, limits)) {
      const Permutation& a = rep.element;
      if (core.contains(a)) continue;
      // C_P(a) = 1: no nontrivial element of the p-core commutes with a.
      bool clean = true;
      core.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
        if (x.is_identity()) return true;
        if (x.conjugated_by(a) == x) {
          clean = false;
          return false;
        }
        return true;
      });
      if (!clean)
        return {SweepStatus::Counterexample,
                "p=" + std::to_string(p) + ", a=" + a.cycle_string() +
                    " centralizes part of the p-core"};
      // <a> meets F trivially.
      Permutation pw = a;
      while (!pw.is_identity()) {
        if (f.contains(pw))
          return {SweepStatus::Counterexample,
                  "p=" + std::to_string(p) + ", <a> meets F nontrivially"};
        pw = pw * a;
      }
    }
  }
  return {SweepStatus::Pass, ""};
}

SweepResult odd_normal_implies_soluble(const PermGroup& g, const Limits& limits,
                                       std::optional<bool> known_cn) {
  bool cn = known_cn ? *known_cn : is_cn(g, limits);
  if (!cn) return {SweepStatus::Skipped, "group is not CN"};
  PermGroup f = fitting_subgroup(g, limits);
  bool has_odd_normal = odd_part(f.order()) > 1;
  if (!has_odd_normal && g.order() <= limits.max_enumeration) {
    for (const PermGroup& m : minimal_normal_subgroups(g, limits))
      if (m.order() % 2 == 1 && m.order() > 1) {
        has_odd_normal = true;
        break;
      }
  }
  if (!has_odd_normal) return {SweepStatus::Pass, "no nontrivial normal odd-order subgroup"};
  if (is_soluble(g, limits)) return {SweepStatus::Pass, ""};
  return {SweepStatus::Counterexample, "odd normal subgroup in a non-soluble CN group"};
}

SweepResult eleme_shadow_sweep(const PermGroup& g, const Limits& limits,
                               std::optional<bool> known_cn) {
  bool cn = known_cn ? *known_cn : is_cn(g, limits);
  if (!cn) return {SweepStatus::Skipped, "group is not CN"};
  bool scannable = g.order() <= limits.subgroup_scan_bound;
  std::vector<Permutation> all_elements;
  if (scannable) all_elements = g.elements(limits.subgroup_scan_bound);

  for (unsigned p : prime_divisors(g.order())) {
    // Normal p'-candidates exist for every group size.
    std::vector<PermGroup> normal_qs;
    {
      std::vector<Permutation> gens;
      std::uint64_t ord = 1;
      for (unsigned q : prime_divisors(g.order())) {
        if (q == p) continue;
        PermGroup oq = p_core(g, q, limits);
        if (oq.order() > 1) {
          normal_qs.push_back(oq);
          ord *= oq.order();
          for (const Permutation& x : oq.generators()) gens.push_back(x);
        }
      }
      if (ord > 1) normal_qs.push_back(PermGroup(g.degree(), std::move(gens), ord));
    }
    if (normal_qs.empty() && !scannable) continue; // nothing to test against

    // Noncyclic subgroups B of order p^2 from commuting pairs of order-p
    // elements: x ranges over class representatives, y over the
    // centralizer of x.
    for (const auto& rep : sylow_confined_class_reps(g, p, true, limits)) {
      const Permutation& x = rep.element;
      PermGroup cx = centralizer_element(g, x, limits);
      std::vector<PermGroup> bs;
      KeySet b_seen;
      cx.for_each_element(limits.max_enumeration, [&](const Permutation& y) {
        if (y.order() != p) return true;
        PermGroup b(g.degree(), {x, y});
        if (b.order() != static_cast<std::uint64_t>(p) * p) return true;
        auto key = subgroup_element_keys(g, b);
        if (!b_seen.insert(key).second) return true;
        bs.push_back(std::move(b));
        return true;
      });
      for (const PermGroup& b : bs) {
        auto centralized = [&](const PermGroup& q) {
          for (const Permutation& bg : b.generators())
            for (const Permutation& qg : q.generators())
              if (qg.conjugated_by(bg) != qg) return false;
          return true;
        };
        auto invariant = [&](const PermGroup& q) {
          for (const Permutation& bg : b.generators())
            for (const Permutation& qg : q.generators())
              if (!q.contains(qg.conjugated_by(bg))) return false;
          return true;
        };
        for (const PermGroup& q : normal_qs) {
          if (q.order() % p == 0) continue;
          if (!centralized(q))
            return {SweepStatus::Counterexample,
                    "p=" + std::to_string(p) + ": normal p'-subgroup of order " +
                        std::to_string(q.order()) + " not centralized"};
        }
        if (!scannable) continue;
        for (const Permutation& z : all_elements) {
          if (z.is_identity() || z.order() % p == 0) continue;
          // Smallest B-invariant subgroup containing z.
          std::vector<Permutation> orbit{z};
          StabChain acc(g.degree());
          acc.insert_generator(z);
          std::vector<Permutation> gens{z};
          for (size_t pos = 0; pos < orbit.size(); ++pos) {
            for (const Permutation& bg : b.generators()) {
              Permutation w = orbit[pos].conjugated_by(bg);
              if (acc.contains(w)) continue;
              acc.insert_generator(w);
              gens.push_back(w);
              orbit.push_back(std::move(w));
            }
          }
          PermGroup qz(g.degree(), gens);
          if (qz.order() % p == 0) continue; // not a p'-group
          if (!invariant(qz)) continue;       // closure is invariant by construction
          if (!centralized(qz))
            return {SweepStatus::Counterexample,
                    "p=" + std::to_string(p) + ": invariant p'-subgroup <z^B> with z=" +
                        z.cycle_string() + " not centralized"};
        }
      }
    }
  }
  return {SweepStatus::Pass, ""};
}

} // namespace cng
