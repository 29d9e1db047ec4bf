#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainlocal/errors.hpp"
#include "chainlocal/perm.hpp"

using namespace chainlocal;

TEST_CASE("cycle parsing round trip") {
  Perm g = parse_cycles("(0 1)(2 3)", 4);
  CHECK(g[0] == 1);
  CHECK(g[1] == 0);
  CHECK(g[2] == 3);
  CHECK(g.to_cycle_string() == "(0 1)(2 3)");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("(0,1,2)", 3) == parse_cycles("(0 1 2)", 3));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("", 3), InputError);
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), InputError);
}

TEST_CASE("composition is left to right") {
  Perm a = parse_cycles("(0 1)", 3);
  Perm b = parse_cycles("(1 2)", 3);
  Perm ab = a * b;  // apply a first
  CHECK(ab[0] == 2);
  CHECK((a * a).is_identity());
  CHECK(a.inverse() == a);
}

TEST_CASE("order and powers") {
  Perm c = parse_cycles("(0 1 2 3 4)", 6);
  CHECK(c.order() == 5);
  CHECK(c.pow(5).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(parse_cycles("(0 1)(2 3 4)", 5).order() == 6);
}

TEST_CASE("conjugation convention") {
  Perm h = parse_cycles("(0 1)", 3);
  Perm g = parse_cycles("(0 1 2)", 3);
  // h^g = g^-1 h g moves the points 0^g = 1 and 1^g = 2.
  CHECK(h.conjugated_by(g) == parse_cycles("(1 2)", 3));
}
