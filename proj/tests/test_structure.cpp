#include "doctest.h"

#include "cng/structure.hpp"
#include "cng/standard_groups.hpp"
#include "oracles.hpp"

using namespace cng;

namespace {

PermGroup v4_in_s4() {
  return PermGroup(4, {Permutation::parse_cycles("(0 1)(2 3)", 4),
                       Permutation::parse_cycles("(0 2)(1 3)", 4)});
}

} // namespace

TEST_CASE("centralizer of a subgroup") {
  PermGroup s4 = symmetric_group(4);
  CHECK(centralizer_subgroup(s4, PermGroup::trivial(4)).order() == 24);
  PermGroup c = centralizer_subgroup(s4, v4_in_s4());
  CHECK(c.order() == 4); // C_{S4}(V4) = V4
  CHECK(v4_in_s4().contains_subgroup(c));

  PermGroup sl = sl23_group();
  PermGroup syl2 = sylow_subgroup(sl, 2);
  CHECK(centralizer_subgroup(sl, syl2).order() == 2); // the center
}

TEST_CASE("center examples") {
  CHECK(center(quaternion_group()).order() == 2);
  CHECK(center(symmetric_group(4)).order() == 1);
  CHECK(center(cyclic_group(9)).order() == 9);
}

TEST_CASE("derived subgroup of S4 is A4") {
  PermGroup d = derived_subgroup(symmetric_group(4));
  CHECK(d.order() == 12);
  CHECK(alternating_group(4).contains_subgroup(d));
}

TEST_CASE("normalizer of a Sylow 3-subgroup of S4 has order 6") {
  PermGroup s4 = symmetric_group(4);
  PermGroup syl3 = sylow_subgroup(s4, 3);
  CHECK(syl3.order() == 3);
  PermGroup n = normalizer(s4, syl3);
  CHECK(n.order() == 6);
  // Oracle: filtered enumeration.
  auto all = oracle::closure_set(4, s4.generators());
  size_t count = 0;
  auto sylset = oracle::closure_set(4, syl3.generators());
  for (const auto& e : all) {
    bool norm = true;
    for (const auto& s : sylset)
      if (!sylset.count(oracle::mul(oracle::mul(oracle::inv(e), s), e))) {
        norm = false;
        break;
      }
    if (norm) ++count;
  }
  CHECK(n.order() == count);
}

TEST_CASE("sylow subgroups") {
  PermGroup s4 = symmetric_group(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).order() == 1);

  PermGroup sl = sl23_group();
  PermGroup syl2 = sylow_subgroup(sl, 2);
  CHECK(syl2.order() == 8);
  CHECK(is_normal(sl, syl2));

  CHECK(sylow_subgroup(symmetric_group(6), 2).order() == 16);
  CHECK(sylow_subgroup(symmetric_group(6), 3).order() == 9);
  CHECK(sylow_subgroup(alternating_group(6), 2).order() == 8);
}

TEST_CASE("sylow subgroups are conjugate") {
  std::mt19937_64 rng(7);
  for (const PermGroup& g : {symmetric_group(4), sl23_group(), dicyclic_group(6)}) {
    for (unsigned p : prime_divisors(g.order())) {
      PermGroup syl = sylow_subgroup(g, p);
      CHECK(syl.order() == p_part(g.order(), p));
      for (int t = 0; t < 20; ++t) {
        PermGroup moved = conjugate_subgroup(syl, g.random_element(rng));
        CHECK(moved.order() == syl.order());
        CHECK(g.contains_subgroup(moved));
        // Conjugate back by searching the subgroup conjugation orbit.
        bool found = false;
        g.for_each_element(2000, [&](const Permutation& c) {
          if (syl.contains_subgroup(conjugate_subgroup(moved, c))) {
            found = true;
            return false;
          }
          return true;
        });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("p-cores") {
  PermGroup s4 = symmetric_group(4);
  PermGroup o2 = p_core(s4, 2);
  CHECK(o2.order() == 4);
  CHECK(v4_in_s4().contains_subgroup(o2));
  CHECK(p_core(s4, 3).order() == 1);
  CHECK(p_core(alternating_group(5), 2).order() == 1);
  PermGroup q8c3 = direct_product(quaternion_group(), cyclic_group(3));
  CHECK(p_core(q8c3, 2).order() == 8);
}

TEST_CASE("fitting subgroups against the brute-force oracle") {
  auto check = [](const PermGroup& g) {
    PermGroup f = fitting_subgroup(g);
    auto all = oracle::closure_set(g.degree(), g.generators());
    auto brute = oracle::fitting_set(g.degree(), all);
    CHECK(f.order() == brute.size());
    for (const Permutation& x : f.generators()) CHECK(brute.count(x.images()));
    CHECK(is_nilpotent(f));
    CHECK(is_normal(g, f));
  };
  check(symmetric_group(4)); // order 4
  check(sl23_group());       // order 8
  check(symmetric_group(3)); // order 3
  check(dihedral_group(6));  // order 12: C6 x C2? fitting of D12
  check(dicyclic_group(3));
}

TEST_CASE("fitting of A5 is trivial") {
  CHECK(fitting_subgroup(alternating_group(5)).order() == 1);
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(direct_product(quaternion_group(), cyclic_group(3))));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK_FALSE(is_nilpotent(sl23_group()));
  CHECK(is_nilpotent(dicyclic_group(4))); // Q16
  CHECK(is_nilpotent(PermGroup::trivial(3)));
}

TEST_CASE("nilpotency agrees with the coprime-commuting criterion") {
  for (const PermGroup& g :
       {symmetric_group(4), sl23_group(), dihedral_group(6), dicyclic_group(3),
        direct_product(quaternion_group(), cyclic_group(3)), cyclic_group(12)}) {
    auto all = oracle::closure_set(g.degree(), g.generators());
    CHECK(is_nilpotent(g) == oracle::is_nilpotent_set(all));
  }
}

TEST_CASE("solubility") {
  CHECK(is_soluble(symmetric_group(4)));
  CHECK_FALSE(is_soluble(alternating_group(5)));
  CHECK(is_soluble(PermGroup::trivial(2)));
  CHECK_FALSE(is_soluble(symmetric_group(5)));
  CHECK(is_soluble(sl23_group()));
}

TEST_CASE("solubility agrees with the derived-series oracle") {
  for (const PermGroup& g : {symmetric_group(4), alternating_group(5), sl23_group(),
                             dihedral_group(7), gl23_group()}) {
    auto all = oracle::closure_set(g.degree(), g.generators());
    CHECK(is_soluble(g) == oracle::is_soluble_set(g.degree(), all));
  }
}

TEST_CASE("fitting heights") {
  CHECK(fitting_height(quaternion_group()) == 1);
  CHECK(fitting_height(symmetric_group(3)) == 2);
  CHECK(fitting_height(symmetric_group(4)) == 3);
  CHECK(fitting_height(cyclic_group(1)) == 0);
  CHECK_THROWS_AS(fitting_height(alternating_group(5)), Precondition);
}

TEST_CASE("minimal normal subgroups and socle") {
  auto mins = minimal_normal_subgroups(symmetric_group(4));
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);

  CHECK(socle(alternating_group(5)).order() == 60);
  CHECK(normal_closure(symmetric_group(4),
                       {Permutation::parse_cycles("(0 1 2)", 4)})
            .order() == 12);
}

TEST_CASE("normal subgroup scan matches the oracle") {
  for (const PermGroup& g : {symmetric_group(4), sl23_group(), dihedral_group(6),
                             alternating_group(5)}) {
    auto scan = normal_subgroups(g);
    auto brute = oracle::normal_subgroups_set(g.degree(),
                                              oracle::closure_set(g.degree(), g.generators()));
    CHECK(scan.size() == brute.size());
    std::multiset<std::uint64_t> a, b;
    for (const auto& n : scan) a.insert(n.order());
    for (const auto& n : brute) b.insert(n.size());
    CHECK(a == b);
  }
}

TEST_CASE("normal subgroup scan bound") {
  Limits tight;
  tight.subgroup_scan_bound = 20;
  CHECK_THROWS_AS(normal_subgroups(symmetric_group(4), tight), BoundExceeded);
}

TEST_CASE("sylow-confined class representatives") {
  // S4 involutions: two classes (transpositions, double transpositions).
  auto reps2 = sylow_confined_class_reps(symmetric_group(4), 2, true);
  CHECK(reps2.size() == 2);
  // All 2-elements: adds the 4-cycles class.
  auto reps_all = sylow_confined_class_reps(symmetric_group(4), 2, false);
  CHECK(reps_all.size() == 3);
  auto reps3 = sylow_confined_class_reps(symmetric_group(4), 3, true);
  CHECK(reps3.size() == 1);
  CHECK(reps3[0].class_size == 8);
}

TEST_CASE("intersections") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  PermGroup d8 = sylow_subgroup(s4, 2);
  PermGroup meet = intersect_subgroups(a4, d8);
  CHECK(meet.order() == 4);
}
