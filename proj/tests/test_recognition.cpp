#include "doctest.h"

#include <random>

#include "cng/recognition.hpp"
#include "cng/standard_groups.hpp"

using namespace cng;

TEST_CASE("cyclicity") {
  CHECK(is_cyclic(cyclic_group(6)));
  CHECK(is_cyclic(PermGroup::trivial(3)));
  CHECK(is_cyclic(cyclic_group(15)));
  CHECK_FALSE(is_cyclic(PermGroup(4, {Permutation::parse_cycles("(0 1)", 4),
                                      Permutation::parse_cycles("(2 3)", 4)})));
  CHECK_FALSE(is_cyclic(symmetric_group(3)));
}

TEST_CASE("generalized quaternion recognition") {
  CHECK(is_generalized_quaternion(quaternion_group()));
  CHECK(is_generalized_quaternion(dicyclic_group(4)));  // Q16
  CHECK(is_generalized_quaternion(dicyclic_group(8)));  // Q32
  CHECK_FALSE(is_generalized_quaternion(cyclic_group(8)));
  CHECK_FALSE(is_generalized_quaternion(dihedral_group(4))); // D8: 5 involutions
  CHECK_FALSE(is_generalized_quaternion(dicyclic_group(3))); // order 12
  CHECK_FALSE(is_generalized_quaternion(cyclic_group(4)));
}

TEST_CASE("generalized quaternion groups have a cyclic subgroup of index 2") {
  for (unsigned m : {2u, 4u, 8u}) {
    PermGroup q = dicyclic_group(m);
    bool found = false;
    q.for_each_element(1000, [&](const Permutation& x) {
      if (x.order() == q.order() / 2) {
        found = true;
        return false;
      }
      return true;
    });
    CHECK(found);
  }
}

TEST_CASE("cyclic-odd times quaternion decomposition") {
  PermGroup c3q8 = direct_product(cyclic_group(3), quaternion_group());
  auto dec = decompose_cyclic_odd_times_quaternion(c3q8);
  REQUIRE(dec.has_value());
  CHECK(dec->odd_part.order() == 3);
  CHECK(dec->quaternion_part.order() == 8);

  CHECK_FALSE(decompose_cyclic_odd_times_quaternion(sl23_group()).has_value());
  // Q8 alone: trivial odd part is cyclic.
  CHECK(decompose_cyclic_odd_times_quaternion(quaternion_group()).has_value());
  // C15 is nilpotent with cyclic odd part but has no quaternion Sylow 2.
  CHECK_FALSE(decompose_cyclic_odd_times_quaternion(cyclic_group(15)).has_value());
}

TEST_CASE("frobenius structure of S3 and A4") {
  auto s3 = frobenius_structure(symmetric_group(3));
  REQUIRE(s3.has_value());
  CHECK(s3->kernel.order() == 3);
  CHECK(s3->complement.order() == 2);

  auto a4 = frobenius_structure(alternating_group(4));
  REQUIRE(a4.has_value());
  CHECK(a4->kernel.order() == 4);
  CHECK(a4->complement.order() == 3);

  CHECK_FALSE(frobenius_structure(cyclic_group(6)).has_value());
  CHECK_FALSE(frobenius_structure(symmetric_group(4)).has_value());
}

TEST_CASE("frobenius invariants hold and H meets its conjugates trivially") {
  std::mt19937_64 rng(99);
  for (const PermGroup& g : {symmetric_group(3), alternating_group(4), dihedral_group(5)}) {
    auto fs = frobenius_structure(g);
    REQUIRE(fs.has_value());
    CHECK(is_normal(g, fs->kernel));
    CHECK(fs->kernel.order() * fs->complement.order() == g.order());
    CHECK(intersect_subgroups(fs->kernel, fs->complement).order() == 1);
    for (int t = 0; t < 50; ++t) {
      Permutation c = g.random_element(rng);
      if (fs->complement.contains(c)) continue;
      PermGroup moved = conjugate_subgroup(fs->complement, c);
      CHECK(intersect_subgroups(fs->complement, moved).order() <= 1);
    }
  }
}

TEST_CASE("simplicity and almost simplicity") {
  CHECK(is_simple(alternating_group(5)));
  CHECK(is_almost_simple(alternating_group(5)));
  CHECK_FALSE(is_simple(symmetric_group(5)));
  CHECK(is_almost_simple(symmetric_group(5)));
  CHECK_FALSE(is_simple(symmetric_group(4)));
  CHECK_FALSE(is_almost_simple(symmetric_group(4)));
  CHECK(is_simple(gl32_group()));
  CHECK(is_simple(alternating_group(6)));
  CHECK_FALSE(is_simple(cyclic_group(6)));
  CHECK_FALSE(is_almost_simple(cyclic_group(7))); // simple but abelian
}

TEST_CASE("SL(2,3) recognition") {
  CHECK(is_sl23(sl23_group()));
  CHECK_FALSE(is_sl23(direct_product(cyclic_group(3), quaternion_group())));
  CHECK_FALSE(is_sl23(symmetric_group(4)));
  CHECK_FALSE(is_sl23(dicyclic_group(6))); // order 24, Sylow2 not normal... still false
  CHECK_FALSE(is_sl23(cyclic_group(24)));
}

TEST_CASE("SL(2,3) recognition agrees with the isomorphism backtrack") {
  PermGroup reference = sl23_group();
  std::vector<PermGroup> order24 = {
      sl23_group(),
      symmetric_group(4),
      direct_product(cyclic_group(3), quaternion_group()),
      cyclic_group(24),
      dicyclic_group(6),
      direct_product(cyclic_group(2), alternating_group(4)),
      direct_product(cyclic_group(2), dicyclic_group(3)),
      direct_product(cyclic_group(4), symmetric_group(3)),
      direct_product(cyclic_group(2),
                     direct_product(cyclic_group(2), symmetric_group(3))),
      dihedral_group(12),
  };
  for (const PermGroup& g : order24) {
    REQUIRE(g.order() == 24);
    CHECK(is_sl23(g) == isomorphic_backtrack(g, reference));
  }
}

TEST_CASE("dihedral frobenius witnesses in non-soluble groups") {
  for (const PermGroup& g : {alternating_group(5), symmetric_group(5), gl32_group()}) {
    auto w = find_dihedral_frobenius(g);
    REQUIRE(w.has_value());
    CHECK(w->involution.order() == 2);
    std::uint64_t m = w->odd_element.order();
    CHECK(m > 1);
    CHECK(m % 2 == 1);
    // <a, c> is dihedral of order 2m and a inverts c.
    CHECK(w->odd_element.conjugated_by(w->involution) == w->odd_element.inverse());
    PermGroup d(g.degree(), {w->involution, w->odd_element});
    CHECK(d.order() == 2 * m);
    auto fs = frobenius_structure(d);
    REQUIRE(fs.has_value());
    CHECK(fs->kernel.order() == m);
  }
}

TEST_CASE("no dihedral frobenius witness required for abelian groups") {
  CHECK_FALSE(find_dihedral_frobenius(cyclic_group(12)).has_value());
  CHECK_FALSE(
      find_dihedral_frobenius(direct_product(cyclic_group(2), cyclic_group(2)))
          .has_value());
}

TEST_CASE("isomorphism backtrack sanity") {
  CHECK(isomorphic_backtrack(cyclic_group(6),
                             direct_product(cyclic_group(2), cyclic_group(3))));
  CHECK_FALSE(isomorphic_backtrack(cyclic_group(4),
                                   direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(isomorphic_backtrack(dihedral_group(3), symmetric_group(3)));
}
