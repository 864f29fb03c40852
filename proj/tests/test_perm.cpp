#include "doctest.h"

#include "cng/perm.hpp"

using namespace cng;

TEST_CASE("composition is left-to-right") {
  // (0 1) then (1 2): point 0 goes to 1, then 1 goes to 2.
  Permutation a = Permutation::parse_cycles("(0 1)", 3);
  Permutation b = Permutation::parse_cycles("(1 2)", 3);
  Permutation c = a * b;
  CHECK(c[0] == 2);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
}

TEST_CASE("identity is neutral") {
  Permutation p = Permutation::parse_cycles("(0 2 3)", 5);
  CHECK(p * Permutation::identity(5) == p);
  CHECK(Permutation::identity(5) * p == p);
}

TEST_CASE("order-4 cycle powers back to identity") {
  Permutation p = Permutation::parse_cycles("(0 1 2 3)", 4);
  Permutation q = p * p * p * p;
  CHECK(q.is_identity());
  CHECK(p.order() == 4);
}

TEST_CASE("inverse composes to identity") {
  Permutation p = Permutation::parse_cycles("(0 4)(1 2 3)", 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
}

TEST_CASE("conjugation matches definition") {
  Permutation x = Permutation::parse_cycles("(0 1 2)", 5);
  Permutation g = Permutation::parse_cycles("(0 3)(1 4)", 5);
  CHECK(x.conjugated_by(g) == g.inverse() * x * g);
}

TEST_CASE("cycle string round trip") {
  for (const char* s : {"()", "(0 1)", "(0 1 2)(3 4)", "(1 5)(2 4 6)"}) {
    Permutation p = Permutation::parse_cycles(s, 7);
    CHECK(Permutation::parse_cycles(p.cycle_string(), 7) == p);
  }
  CHECK(Permutation::identity(4).cycle_string() == "()");
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 7)", 4), InvalidSpec);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1", 4), InvalidSpec);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)(1 2)", 4), InvalidSpec);
  CHECK_THROWS_AS(Permutation::parse_cycles("", 4), InvalidSpec);
  CHECK_THROWS_AS(Permutation::parse_cycles("0 1", 4), InvalidSpec);
}

TEST_CASE("degree mismatch is rejected") {
  Permutation p = Permutation::identity(3);
  Permutation q = Permutation::identity(4);
  CHECK_THROWS_AS(p * q, Precondition);
}

TEST_CASE("element orders") {
  CHECK(Permutation::identity(5).order() == 1);
  CHECK(Permutation::parse_cycles("(0 1)(2 3 4)", 5).order() == 6);
}
