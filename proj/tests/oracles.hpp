#pragma once

// Brute-force reference implementations used to pin expected values in the
// tests.  Everything here works on explicit element sets and stays
// independent of the stabilizer-chain code paths it cross-checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cng/perm.hpp"

namespace cng::oracle {

using Element = std::vector<unsigned>;

inline Element mul(const Element& a, const Element& b) {
  Element r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Element inv(const Element& a) {
  Element r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
  return r;
}

inline Element id(unsigned degree) {
  Element e(degree);
  std::iota(e.begin(), e.end(), 0u);
  return e;
}

/// Product closure by breadth-first multiplication.
inline std::set<Element> closure_set(unsigned degree, std::vector<Element> gens) {
  std::set<Element> seen{id(degree)};
  std::vector<Element> queue{id(degree)};
  while (!queue.empty()) {
    Element cur = queue.back();
    queue.pop_back();
    for (const Element& g : gens) {
      Element next = mul(cur, g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

inline std::set<Element> closure_set(unsigned degree, const std::vector<Permutation>& gens) {
  std::vector<Element> raw;
  for (const Permutation& g : gens) raw.push_back(g.images());
  return closure_set(degree, raw);
}

inline std::uint64_t element_order(const Element& a) {
  Element cur = a;
  std::uint64_t n = 1;
  Element e = id(static_cast<unsigned>(a.size()));
  while (cur != e) {
    cur = mul(cur, a);
    ++n;
  }
  return n;
}

inline std::set<Element> centralizer_set(const std::set<Element>& group, const Element& x) {
  std::set<Element> out;
  for (const Element& g : group)
    if (mul(g, x) == mul(x, g)) out.insert(g);
  return out;
}

/// Nilpotency via the coprime-order commuting criterion.
inline bool is_nilpotent_set(const std::set<Element>& group) {
  std::vector<std::pair<Element, std::uint64_t>> withord;
  for (const Element& g : group) withord.emplace_back(g, element_order(g));
  for (const auto& [a, oa] : withord)
    for (const auto& [b, ob] : withord)
      if (std::gcd(oa, ob) == 1 && mul(a, b) != mul(b, a)) return false;
  return true;
}

inline std::vector<std::set<Element>> conjugacy_classes_set(const std::set<Element>& group) {
  std::vector<std::set<Element>> classes;
  std::set<Element> seen;
  for (const Element& x : group) {
    if (seen.count(x)) continue;
    std::set<Element> cls;
    for (const Element& g : group) cls.insert(mul(mul(inv(g), x), g));
    for (const Element& y : cls) seen.insert(y);
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// All normal subgroups, as joins of conjugacy-class closures.
inline std::vector<std::set<Element>> normal_subgroups_set(unsigned degree,
                                                           const std::set<Element>& group) {
  auto classes = conjugacy_classes_set(group);
  std::vector<std::set<Element>> principal;
  for (const auto& cls : classes) {
    std::vector<Element> gens(cls.begin(), cls.end());
    principal.push_back(closure_set(degree, gens));
  }
  std::set<std::set<Element>> normals{{id(degree)}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<Element>> snapshot(normals.begin(), normals.end());
    for (const auto& n : snapshot) {
      for (const auto& p : principal) {
        std::vector<Element> gens(n.begin(), n.end());
        gens.insert(gens.end(), p.begin(), p.end());
        auto join = closure_set(degree, gens);
        if (normals.insert(join).second) grew = true;
      }
    }
  }
  return {normals.begin(), normals.end()};
}

/// Largest normal nilpotent subgroup by direct scan.
inline std::set<Element> fitting_set(unsigned degree, const std::set<Element>& group) {
  std::set<Element> best{id(degree)};
  for (const auto& n : normal_subgroups_set(degree, group))
    if (n.size() > best.size() && is_nilpotent_set(n)) best = n;
  return best;
}

inline bool is_soluble_set(unsigned degree, std::set<Element> group) {
  while (group.size() > 1) {
    std::vector<Element> comms;
    for (const Element& a : group)
      for (const Element& b : group)
        comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
    auto derived = closure_set(degree, comms);
    if (derived.size() == group.size()) return false;
    group = std::move(derived);
  }
  return true;
}

} // namespace cng::oracle
