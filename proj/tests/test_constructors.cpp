#include "doctest.h"

#include "cng/classifier.hpp"
#include "cng/constructors.hpp"
#include "cng/standard_groups.hpp"

using namespace cng;

TEST_CASE("hurwitz units form SL(2,3)") {
  CHECK(hurwitz_units().size() == 24);
  PermGroup s = hurwitz_unit_group();
  CHECK(s.order() == 24);
  CHECK(is_sl23(s));
  CHECK(s.generators()[0].order() == 4);
  CHECK(s.generators()[1].order() == 3);
}

TEST_CASE("order-3 unit acts with determinant 9 away from identity") {
  Quaternion omega{-1, 1, 1, 1};
  CHECK(hurwitz_left_mult_det_minus_identity(omega) == 9);
  // So reduction mod 2^n and mod any prime p != 3 stays fixed point free.
  for (unsigned m : {2u, 4u, 5u, 7u, 13u})
    CHECK(mat_fixed_point_free(hurwitz_left_mult_matrix(omega, m)));
  CHECK_FALSE(mat_fixed_point_free(hurwitz_left_mult_matrix(omega, 3)));
}

TEST_CASE("every nontrivial unit is fixed point free mod 5 and mod 13") {
  for (const Quaternion& q : hurwitz_units()) {
    if (q == Quaternion{2, 0, 0, 0}) continue;
    CHECK(mat_fixed_point_free(hurwitz_left_mult_matrix(q, 5)));
    CHECK(mat_fixed_point_free(hurwitz_left_mult_matrix(q, 13)));
  }
}

TEST_CASE("matrix basics") {
  Mat id = Mat::identity(3, 7);
  CHECK(det_mod(id) == 1);
  CHECK(mat_invertible(id));
  CHECK_FALSE(mat_fixed_point_free(id));
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(2, 7) == 2016);
  CHECK(gl_order(4, 2) == 20160);
  CHECK(gl_order(1, 5) == 4);
  CHECK(gl_order(2, 4) == 96); // 2^4 * |GL(2,2)|
}

TEST_CASE("semidirect with trivial acting group is elementary abelian") {
  MatrixAction trivial{2, 3, {}};
  PermGroup g = semidirect(trivial, PermGroup::trivial(1));
  CHECK(g.order() == 9);
  CHECK(is_nilpotent(g));
}

TEST_CASE("fpf_search on C4 mod 5 finds multiplication by 2") {
  PermGroup c4 = cyclic_group(4);
  auto action = fpf_search(c4, 1, 5, ExcludeClass::None);
  REQUIRE(action.has_value());
  CHECK(action->matrices.size() == 1);
  CHECK(action->matrices[0].at(0, 0) == 2); // lexicographically first solution
  PermGroup g = semidirect(*action, c4);
  CHECK(g.order() == 20);
  auto fs = frobenius_structure(g);
  REQUIRE(fs.has_value());
  CHECK(fs->kernel.order() == 5);
}

TEST_CASE("fpf_search proves nonexistence for C2 mod 2") {
  CHECK_FALSE(fpf_search(cyclic_group(2), 1, 2, ExcludeClass::None).has_value());
}

TEST_CASE("fpf_search budget exhaustion is an error, not a nonexistence claim") {
  // Space larger than the budget: rejected up front.
  Limits tiny;
  tiny.search_budget = 2;
  CHECK_THROWS_AS(fpf_search(cyclic_group(4), 1, 5, ExcludeClass::None, tiny),
                  SearchExhausted);
  // Space within budget but evaluations run out mid-search.
  Limits one;
  one.search_budget = 1;
  CHECK_THROWS_AS(fpf_search(cyclic_group(2), 1, 2, ExcludeClass::None, one),
                  SearchExhausted);
  // With just enough budget the same search completes and proves nonexistence.
  Limits two;
  two.search_budget = 2;
  CHECK_FALSE(fpf_search(cyclic_group(2), 1, 2, ExcludeClass::None, two).has_value());
}

TEST_CASE("fpf_search synthesizes the quaternionic action of C3 x Q8 mod 13") {
  PermGroup k = direct_product(cyclic_group(3), quaternion_group());
  auto action = fpf_search(k, 4, 13, ExcludeClass::None);
  REQUIRE(action.has_value());
  CHECK(certify_fixed_point_free(*action, k, ExcludeClass::None));
  CHECK(validate_action(*action, k) == 24);
}

TEST_CASE("example1 with trivial K is cyclic of order p") {
  PermGroup g = example1(PermGroup::trivial(1), 3);
  CHECK(g.order() == 3);
  CHECK(classify(g).verdict == QuotientCase::Cyclic);
}

TEST_CASE("example1 with C4 and p=5 is the Frobenius group of order 20") {
  PermGroup g = example1(cyclic_group(4), 5);
  CHECK(g.order() == 20);
  ClassificationReport r = classify(g);
  CHECK(r.verdict == QuotientCase::Cyclic);
  CHECK(r.fitting_order == 5);
}

TEST_CASE("example1 rejects bad parameters") {
  CHECK_THROWS_AS(example1(cyclic_group(4), 2), Precondition);
  CHECK_THROWS_AS(example1(symmetric_group(3), 5), Precondition);
  CHECK_THROWS_AS(example1(cyclic_group(4), 6), Precondition);
}

TEST_CASE("example2 at m=3, k=2 has order 24 and a Frobenius quotient") {
  PermGroup g = example2(3, 2);
  CHECK(g.order() == 24);
  ClassificationReport r = classify(g);
  CHECK(r.is_cn);
  CHECK(r.verdict == QuotientCase::FrobeniusQuotient);
  CHECK(r.fitting_order == 4);
  REQUIRE(r.frobenius_data.has_value());
  CHECK(r.frobenius_data->kernel_order == 3);
  CHECK(r.frobenius_data->complement_order == 2);
  // The m=3, k=2 instance is S4 up to isomorphism.
  CHECK(isomorphic_backtrack(g, symmetric_group(4)));
}

TEST_CASE("example2 at m=3, k=4 has order 96") {
  PermGroup g = example2(3, 4);
  CHECK(g.order() == 96);
  ClassificationReport r = classify(g);
  CHECK(r.is_cn);
  CHECK(r.verdict == QuotientCase::FrobeniusQuotient);
  CHECK(r.fitting_order == 16);
}

TEST_CASE("example2 at m=5, k=4 has order 160 and kernel order 5") {
  PermGroup g = example2(5, 4);
  CHECK(g.order() == 160);
  ClassificationReport r = classify(g);
  CHECK(r.is_cn);
  CHECK(r.verdict == QuotientCase::FrobeniusQuotient);
  CHECK(r.fitting_order == 16);
  REQUIRE(r.frobenius_data.has_value());
  CHECK(r.frobenius_data->kernel_order == 5);
  CHECK(r.frobenius_data->complement_order == 2);
}

TEST_CASE("example4_a5 is the order-960 almost simple instance") {
  PermGroup g = example4_a5();
  CHECK(g.order() == 960);
  CHECK(g.degree() == 16);
  ClassificationReport r = classify(g);
  CHECK(r.is_cn);
  CHECK(r.verdict == QuotientCase::AlmostSimple);
  CHECK(r.fitting_order == 16);
  REQUIRE(r.side_conditions.size() == 1);
  CHECK(r.side_conditions[0].pass);
}

TEST_CASE("negative control: (Z/7)^2 : SL(2,3) is Frobenius but not CN") {
  PermGroup g = negative_frobenius_sl23(7);
  CHECK(g.order() == 1176);
  ClassificationReport r = classify(g, "negative7");
  CHECK(r.verdict == QuotientCase::NotCN);
  REQUIRE(r.cn_witness.has_value());
  CHECK(r.cn_witness->order() == 2);
  // The witness centralizer contains a full SL(2,3).
  PermGroup c = centralizer_element(g, *r.cn_witness);
  CHECK(c.order() == 24);
  CHECK_FALSE(is_nilpotent(c));
  CHECK(r.fitting_order == 49);
}

TEST_CASE("example3 at p=5, n=1: quotient is SL(2,3) and pi(N) = {2,5}") {
  Example3Result ex = example3(5, 1);
  CHECK(ex.group.degree() == 10000);
  CHECK(ex.group.order() % ex.designated_normal.order() == 0);
  CHECK(is_normal(ex.group, ex.designated_normal));
  auto primes = prime_divisors(ex.designated_normal.order());
  CHECK(primes == std::vector<unsigned>{2, 5});
  auto [quot, proj] = coset_action(ex.group, ex.designated_normal);
  (void)proj;
  CHECK(quot.order() == 24);
  CHECK(is_sl23(quot));
}

TEST_CASE("example3 rejects bad parameters") {
  CHECK_THROWS_AS(example3(3, 1), Precondition);
  CHECK_THROWS_AS(example3(6, 1), Precondition);
  CHECK_THROWS_AS(example3(5, 0), Precondition);
}
