#include <doctest.h>

#include <random>

#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "support/oracles.hpp"

using namespace dchow;

TEST_CASE("parse") {
  CHECK(parse_diffpoly("y1' - 4*y1") == DiffPoly(Var::y(1, 1)) - DiffPoly(Var::y(1)) * Rational(4));
  CHECK(parse_diffpoly("y1'^2*y2'' - y1") ==
        pow(DiffPoly(Var::y(1, 1)), 2) * DiffPoly(Var::y(2, 2)) - DiffPoly(Var::y(1)));
  CHECK(parse_diffpoly("y2*y3 + 1") == DiffPoly(Var::y(2)) * DiffPoly(Var::y(3)) + DiffPoly(1));
  CHECK(parse_diffpoly("  y1^(5) ") == DiffPoly(Var::y(1, 5)));
  CHECK(parse_diffpoly("(y1 + 1)^(2)") == parse_diffpoly("y1^2 + 2*y1 + 1"));
  CHECK(parse_diffpoly("y1^(3)^2") == pow(DiffPoly(Var::y(1, 3)), 2));
  CHECK(parse_diffpoly("-3/4*y1") == DiffPoly(Var::y(1)) * Rational(-3, 4));
  CHECK(parse_diffpoly("u0_1'", {2, true}) == DiffPoly(Var::u(0, 1, 1)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diffpoly("y1 +"), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly("y1 y2"), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly("2 y1"), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly("(y1"), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly(""), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly("y1/y2"), SyntaxError);
  CHECK_THROWS_AS(parse_diffpoly("x + 1"), UnknownVariable);
  CHECK_THROWS_AS(parse_diffpoly("y3", {2, false}), UnknownVariable);
  CHECK_THROWS_AS(parse_diffpoly("u0_1"), UnknownVariable);
  CHECK_THROWS_AS(parse_diffpoly("y1^-2"), NegativeExponent);
  CHECK_THROWS_AS(parse_diffpoly("y1^(-1)"), NegativeExponent);
  try {
    parse_diffpoly("y1 + * y2");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format") {
  CHECK(format_diffpoly(parse_diffpoly("y1'-4*y1")) == "y1' - 4*y1");
  CHECK(format_diffpoly(DiffPoly()) == "0");
  CHECK(format_diffpoly(parse_diffpoly("4*u0_0*u0_1 + u0_0*u0_1' - u0_1*u0_0'", {1, true})) ==
        "4*u0_0*u0_1 + u0_0*u0_1' - u0_1*u0_0'");
  CHECK(format_diffpoly(parse_diffpoly("-y1^(4)^2/3")) == "-1/3*y1^(4)^2");
  const std::string json = format_diffpoly(parse_diffpoly("2*y1'^3"), FormatStyle::Json);
  CHECK(json == R"js({"terms":[{"coefficient":"2","factors":[{"block":"y","exponent":3,"index":1,"order":1}]}]})js");
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const DiffPoly f = oracle::random_poly(rng, {4, 4, 3, 6, 9}) * Rational(1, 1 + trial % 7);
    CHECK(parse_diffpoly(format_diffpoly(f)) == f);
  }
}

TEST_CASE("rankings round trip") {
  for (const char* text : {"orderly(y1<y2)", "elim(y3<y2<y1)", "block([y1,y2]<[y3])"}) {
    CHECK(format_ranking(parse_ranking(text)) == text);
  }
  CHECK_THROWS_AS(parse_ranking("weird(y1)"), SyntaxError);
  CHECK_THROWS_AS(parse_ranking("elim(y1'<y2)"), SyntaxError);
}

TEST_CASE("problem file round trip") {
  const ProblemSpec spec = parse_problem(R"js({"n": 2, "ranking": "elim(y1<y2)", "char_set": ["y2 - y1'"]})js");
  CHECK(spec.n == 2);
  CHECK(spec.char_set.size() == 1);
  CHECK(spec.to_char_set().dimension() == 1);
  CHECK(parse_problem(format_problem(spec)) == spec);
  const ProblemSpec inferred = parse_problem(R"js({"char_set": ["y1' - 4*y1"]})js");
  CHECK(inferred.n == 1);
  CHECK(inferred.ranking.is_orderly());
  CHECK_THROWS_AS(parse_problem("{"), SyntaxError);
  CHECK_THROWS_AS(parse_problem(R"js({"n": 1, "char_set": ["y2"]})js"), UnknownVariable);
}
