#include "doctest.h"

#include <random>

#include "cng/conjugacy.hpp"
#include "cng/group.hpp"
#include "cng/standard_groups.hpp"
#include "oracles.hpp"

using namespace cng;

TEST_CASE("orders of standard groups") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(dicyclic_group(2).order() == 8);
  CHECK(dicyclic_group(4).order() == 16);
  CHECK(sl23_group().order() == 24);
  CHECK(gl23_group().order() == 48);
  CHECK(gl32_group().order() == 168);
}

TEST_CASE("trivial group from empty generating set") {
  PermGroup g(5, {});
  CHECK(g.order() == 1);
  CHECK(g.elements(10).size() == 1);
  CHECK(g.elements(10)[0].is_identity());
}

TEST_CASE("order via chain equals brute-force closure") {
  auto check = [](const PermGroup& g) {
    auto brute = oracle::closure_set(g.degree(), g.generators());
    CHECK(g.order() == brute.size());
  };
  check(symmetric_group(5)); // 120 by exhaustive enumeration
  check(PermGroup(4, {Permutation::parse_cycles("(0 1 2 3)", 4),
                      Permutation::parse_cycles("(0 2)", 4)})); // dihedral, 8
  check(PermGroup(3, {Permutation::parse_cycles("(0 1)", 3),
                      Permutation::parse_cycles("(1 2)", 3)})); // 6
  check(sl23_group());
  check(dicyclic_group(3));
}

TEST_CASE("membership by sifting") {
  PermGroup c3(3, {Permutation::parse_cycles("(0 1 2)", 3)});
  CHECK(c3.contains(Permutation::parse_cycles("(0 2 1)", 3)));
  CHECK_FALSE(c3.contains(Permutation::parse_cycles("(0 1)", 3)));

  PermGroup a4 = alternating_group(4);
  CHECK_FALSE(a4.contains(Permutation::parse_cycles("(0 1 2 3)", 4)));
  CHECK(a4.contains(Permutation::parse_cycles("(0 1)(2 3)", 4)));
}

TEST_CASE("elements stream covers the group exactly once") {
  PermGroup s4 = symmetric_group(4);
  auto elems = s4.elements(1000);
  CHECK(elems.size() == 24);
  std::set<std::vector<unsigned>> distinct;
  for (const Permutation& p : elems) distinct.insert(p.images());
  CHECK(distinct.size() == 24);
}

TEST_CASE("element stream respects the bound") {
  CHECK_THROWS_AS(symmetric_group(5).elements(100), BoundExceeded);
}

TEST_CASE("sifting random generator words") {
  std::mt19937_64 rng(20240601);
  for (const PermGroup& g : {symmetric_group(5), sl23_group(), dicyclic_group(6)}) {
    const auto& gens = g.generators();
    for (int trial = 0; trial < 100; ++trial) {
      Permutation w = g.identity();
      unsigned len = 1 + static_cast<unsigned>(rng() % 8);
      for (unsigned i = 0; i < len; ++i) w = w * gens[rng() % gens.size()];
      CHECK(g.contains(w));
    }
  }
}

TEST_CASE("known-order construction matches verified construction") {
  PermGroup verified(5, {Permutation::parse_cycles("(0 1 2 3 4)", 5),
                         Permutation::parse_cycles("(0 1)", 5)});
  PermGroup shortcut(5, verified.generators(), 120);
  CHECK(shortcut.order() == 120);
  for (const Permutation& p : verified.elements(200)) CHECK(shortcut.contains(p));
}

TEST_CASE("closure of two transpositions") {
  PermGroup g = closure(3, {Permutation::parse_cycles("(0 1)", 3),
                            Permutation::parse_cycles("(1 2)", 3)});
  CHECK(g.order() == 6);
}

TEST_CASE("closure of empty set") {
  CHECK(closure(3, {}).order() == 1);
}

TEST_CASE("closure of 4-cycle and double transposition is dihedral of order 8") {
  PermGroup g = closure(4, {Permutation::parse_cycles("(0 1 2 3)", 4),
                            Permutation::parse_cycles("(0 2)", 4)});
  CHECK(g.order() == 8);
}

TEST_CASE("direct product") {
  PermGroup g = direct_product(cyclic_group(3), quaternion_group());
  CHECK(g.order() == 24);
  CHECK(g.degree() == 11);
}

TEST_CASE("point stabilizer") {
  PermGroup s5 = symmetric_group(5);
  PermGroup stab = point_stabilizer(s5, 0);
  CHECK(stab.order() == 24);
  for (const Permutation& g : stab.generators()) CHECK(g[0] == 0);

  PermGroup a5 = alternating_group(5);
  CHECK(point_stabilizer(a5, 2).order() == 12);
}

TEST_CASE("centralizers against brute force") {
  PermGroup s5 = symmetric_group(5);
  Permutation t = Permutation::parse_cycles("(0 1)", 5);
  PermGroup c = centralizer_element(s5, t);
  CHECK(c.order() == 12); // 2 * 3!
  auto brute = oracle::centralizer_set(oracle::closure_set(5, s5.generators()), t.images());
  CHECK(c.order() == brute.size());
  for (const Permutation& g : c.generators()) CHECK(g * t == t * g);

  PermGroup s3 = symmetric_group(3);
  CHECK(centralizer_element(s3, Permutation::parse_cycles("(0 1)", 3)).order() == 2);
  CHECK(centralizer_element(s3, s3.identity()).order() == 6);
}

TEST_CASE("centralizer of element not in group is rejected") {
  CHECK_THROWS_AS(
      centralizer_element(alternating_group(4), Permutation::parse_cycles("(0 1)", 4)),
      Precondition);
}

TEST_CASE("conjugacy classes of S4") {
  auto classes = conjugacy_classes(symmetric_group(4));
  CHECK(classes.size() == 5);
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 24);
  // Sizes must match the oracle partition.
  auto brute = oracle::conjugacy_classes_set(oracle::closure_set(4, symmetric_group(4).generators()));
  CHECK(brute.size() == 5);
}

TEST_CASE("class sizes divide the group order") {
  for (const PermGroup& g : {symmetric_group(5), sl23_group(), dicyclic_group(5)}) {
    for (const auto& c : conjugacy_classes(g)) {
      CHECK(g.order() % c.size == 0);
      CHECK(centralizer_element(g, c.representative).order() == g.order() / c.size);
    }
  }
}
