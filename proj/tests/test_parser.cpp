#include <doctest.h>

#include <set>

#include "test_helpers.hpp"

using namespace testing;

TEST_CASE("parse and serialize") {
  const AlgebraExpr r3l = parse("(0,21,l.31)");
  CHECK(r3l.n == 3);
  CHECK(r3l.parameters() == std::set<std::string>{"l"});
  CHECK(serialize(parse("(0,0,12)")) == "(0,0,12)");
  CHECK(serialize(parse("(0,0,0)")) == "(0,0,0)");
  CHECK(serialize(parse("( 0 , 21+31 , 31 , 2.41+32 )")) == "(0,21+31,31,2.41+32)");
  CHECK(serialize(parse("(0,12,2.13,-4.14,15)")) == "(0,12,2.13,-4.14,15)");
  const AlgebraExpr cn = parse("(0,0,12,13,23,14+25+a.23,16+25+35+a.24)");
  CHECK(cn.n == 7);
  CHECK(cn.parameters() == std::set<std::string>{"a"});
}

TEST_CASE("serialize is idempotent and parse inverts it") {
  for (const char* text : {"(0,21+31,31,2.41+32)", "(0,l.21+31,-21+l.31,k2.41+32)", "(0,-1/2.21,3/4.31)",
                           "(2.32,-2.31,2.21)", "(0,m.21,l.31+41,-31+l.41)"}) {
    const std::string once = serialize(parse(text));
    CHECK(serialize(parse(once)) == once);
  }
}

TEST_CASE("instantiation follows the sign convention") {
  const LieAlgebra g = alg("(0,21,l.31)", {{"l", q(1, 2)}});
  CHECK(g.bracket_basis(0, 1) == Vector{0, 1, 0});
  CHECK(g.bracket_basis(0, 2) == Vector{0, 0, q(1, 2)});
  CHECK(alg("(0,0,12)").bracket_basis(0, 1) == Vector{0, 0, -1});
  // Linear in the binding.
  const auto c1 = instantiate(parse("(0,21,l.31)"), {{"l", 1}});
  const auto c3 = instantiate(parse("(0,21,l.31)"), {{"l", 3}});
  CHECK(c3(0, 2, 2) == 3 * c1(0, 2, 2));
  CHECK(alg("(0,0,0,0)") == abelian(4));
}

TEST_CASE("bracketed indices for ten or more generators") {
  const AlgebraExpr e = parse("(0,0,0,0,0,0,0,0,0,[1,2])");
  CHECK(e.n == 10);
  CHECK(serialize(e) == "(0,0,0,0,0,0,0,0,0,[1,2])");
  CHECK_THROWS_AS(parse("(0,0,0,0,0,0,0,0,0,12)"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("(0,0,1.5.12)"), ParseError);
  CHECK_THROWS_AS(parse("(0,0,0.5.12)"), ParseError);
  CHECK_THROWS_AS(parse("(0,0,14)"), ParseError);  // index out of range
  CHECK_THROWS_AS(parse("(0,0,11)"), ParseError);  // repeated index
  CHECK_THROWS_AS(parse("(0,0,12+21)"), ParseError);
  CHECK_THROWS_AS(parse("(0,0,0.12)"), ParseError);
  CHECK_THROWS_AS(parse("0,0,12"), ParseError);
  CHECK_THROWS_AS(parse("(0,0,12"), ParseError);
  CHECK_THROWS_AS(instantiate(parse("(0,21,l.31)")), DomainError);
  CHECK_THROWS_AS(alg("(0,0,12,13+24)"), DomainError);  // Jacobi
  try {
    parse("(0,0,1x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("forms") {
  CHECK(form("34-67", 8).coeff(bit(2) | bit(3)) == 1);
  CHECK(form("21", 3) == -form("12", 3));
  CHECK(form("132", 3) == -form("123", 3));
  CHECK(form("-1/2.12", 3).coeff(bit(0) | bit(1)) == q(-1, 2));
}

TEST_CASE("fixtures") {
  const auto entries = parse_fixture(
      "# comment\n"
      "h3 (0,0,12) @ 1,1,2   # graded\n"
      "\n"
      "r3l (0,21,l.31) | l=1/2\n"
      "d4l (0,l.21,k.31,41+32) | l=3/4, k=1/4\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "h3");
  CHECK(entries[0].grading == std::vector<int>{1, 1, 2});
  CHECK(entries[0].line == 2);
  CHECK(entries[1].bindings.at("l") == q(1, 2));
  CHECK(entries[2].bindings.at("k") == q(1, 4));
  CHECK_THROWS_WITH_AS(parse_fixture("x (0,21,l.31)\n"), doctest::Contains("line 1"), DomainError);
  CHECK_THROWS_AS(parse_fixture("x (0,0,12) @ 1,2\n"), DomainError);
  CHECK_THROWS_AS(parse_fixture("x (0,0,12) | l=0.5\n"), DomainError);
}
