#include <catch2/catch_amalgamated.hpp>

#include "sylprob/perm.hpp"

using namespace sylprob;

TEST_CASE("identity and validation") {
  Perm id(5);
  CHECK(id.is_identity());
  CHECK(id.degree() == 5);
  CHECK_FALSE(id.smallest_moved_point().has_value());
  CHECK_THROWS_AS(Perm(std::vector<unsigned>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Perm(std::vector<unsigned>{0, 3}), Error);
}

TEST_CASE("composition is left to right") {
  // (1 2) then (2 3) sends 1->3, 3->2, 2->1
  Perm a = parse_cycles(3, "(1 2)");
  Perm b = parse_cycles(3, "(2 3)");
  Perm c = a * b;
  CHECK(c == parse_cycles(3, "(1 3 2)"));
  CHECK(c[0] == 2);
  CHECK(c[2] == 1);
  CHECK(c[1] == 0);
}

TEST_CASE("involution squares to identity") {
  Perm t = parse_cycles(4, "(1 2)");
  CHECK((t * t).is_identity());
}

TEST_CASE("three-cycle composed with itself") {
  Perm r = parse_cycles(3, "(1 2 3)");
  CHECK(r * r == parse_cycles(3, "(1 3 2)"));
  CHECK((r * r * r).is_identity());
}

TEST_CASE("inverse composes to identity both ways") {
  Perm p = parse_cycles(7, "(1 4 6)(2 5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(Perm(3) * Perm(4), DegreeMismatchError);
}

TEST_CASE("cycle parsing") {
  CHECK(parse_cycles(3, "").is_identity());
  CHECK(parse_cycles(3, "()").is_identity());
  Perm t = parse_cycles(3, "(1 2)");
  CHECK(t[0] == 1);
  CHECK(t[1] == 0);
  CHECK(t[2] == 2);
  CHECK(parse_cycles(5, "(1 2 3)(4 5)").order() == 6);
  CHECK(parse_cycles(5, "(1,2,3)(4,5)") == parse_cycles(5, "(1 2 3)(4 5)"));

  CHECK_THROWS_AS(parse_cycles(5, "(1 2 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(5, "(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "1 2)"), ParseError);
}

TEST_CASE("cycle printing round-trips") {
  for (const char* s : {"(1 2)", "(1 2 3)(4 5)", "(2 6)(3 5)", "()"}) {
    Perm p = parse_cycles(6, s);
    CHECK(parse_cycles(6, p.cycle_string()) == p);
  }
}

TEST_CASE("element order and powers") {
  Perm p = parse_cycles(5, "(1 2 3)(4 5)");
  CHECK(p.order() == 6);
  CHECK(perm_pow(p, 6).is_identity());
  CHECK(perm_pow(p, 3) == parse_cycles(5, "(4 5)"));
  CHECK(perm_pow(p, 2) == parse_cycles(5, "(1 3 2)"));
  CHECK(perm_pow(p, 0).is_identity());
}

TEST_CASE("conjugation relabels points") {
  Perm t = parse_cycles(3, "(1 2)");
  Perm r = parse_cycles(3, "(2 3)");
  CHECK(conjugate(t, r) == parse_cycles(3, "(1 3)"));
}
