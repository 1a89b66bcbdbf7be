#include <catch2/catch_amalgamated.hpp>

#include "realdim/instances.hpp"
#include "realdim/parse.hpp"
#include "support.hpp"

using namespace realdim;
using testsupport::P;

TEST_CASE("problem files parse") {
  ProblemFile pf = parse_problem("vars: x y\nf1: x^2 + y^2 - 1\n");
  CHECK(pf.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(pf.polynomials.size() == 1);
  CHECK(pf.polynomials[0] == P("x^2 + y^2 - 1", pf.ring()));

  ProblemFile pf2 = parse_problem("# a comment\nvars: x\nf1: 1/3*x - 2\n");
  CHECK(pf2.polynomials[0] == P("1/3*x - 2", make_ring({"x"})));
}

TEST_CASE("parse errors carry position") {
  try {
    parse_problem("vars: x\nf1: x + z\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("undeclared variable z") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_problem("vars: x\nf1: 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars: x\nf1: 2/x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars: x y\n"), ParseError);       // empty system
  CHECK_THROWS_AS(parse_problem("f1: x\n"), ParseError);           // no vars line
  CHECK_THROWS_AS(parse_problem("vars: x\nf1: x y\n"), ParseError);  // implicit mult
  CHECK_THROWS_AS(parse_problem("vars: x\nf1: x + \n"), ParseError);
}

TEST_CASE("polynomial grammar corners") {
  auto ring = testsupport::ring_xy();
  CHECK(P("-x^2", ring) == -P("x^2", ring));
  CHECK(P("(x + y)^3", ring) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", ring));
  CHECK(P("2 - -3", ring) == MPoly::constant(ring, Rational(5)));
  CHECK(P("7/2", ring) == MPoly::constant(ring, make_rational(7, 2)));
  CHECK(P("x^0", ring) == MPoly::constant(ring, Rational(1)));
  CHECK_THROWS_AS(P("x^-2", ring), ParseError);
  CHECK_THROWS_AS(P("(x", ring), ParseError);
}

TEST_CASE("print/parse round-trip on generated instances") {
  for (const ProblemFile& pf :
       {generate_p(4), generate_b(4), generate_s(3, 5, 7), generate_instance("s:2,3", 99)}) {
    ProblemFile back = parse_problem(print_problem(pf));
    CHECK(back.variables == pf.variables);
    REQUIRE(back.polynomials.size() == pf.polynomials.size());
    for (std::size_t i = 0; i < pf.polynomials.size(); ++i)
      CHECK(back.polynomials[i] == pf.polynomials[i]);
  }
}

TEST_CASE("s-family generation is seed-deterministic") {
  ProblemFile a = generate_s(3, 5, 42);
  ProblemFile b = generate_s(3, 5, 42);
  ProblemFile c = generate_s(3, 5, 43);
  CHECK(a.polynomials[0] == b.polynomials[0]);
  CHECK(a.polynomials[0] != c.polynomials[0]);
  CHECK(a.polynomials[0].deg() == 4);
}

TEST_CASE("bad generator parameters") {
  CHECK_THROWS_AS(generate_p(1), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("q:4", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("s:3", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("p:x", 0), std::invalid_argument);
}
