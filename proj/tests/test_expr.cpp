#include "doctest.h"
#include "qsp/error.hpp"
#include "qsp/expr.hpp"

using namespace qsp;

TEST_CASE("expression parser") {
  QuantumAlgebra U(cartan_input("A2"), false);
  auto p = [&](const char* s) { return parse_expression(U, s); };
  CHECK(p("E1") == U.e(0));
  CHECK(p("F2*E1") == U.multiply(U.f(1), U.e(0)));
  CHECK(p("K1^-1") == U.k({-1, 0}));
  CHECK(p("K1^-1*K1") == U.one());
  CHECK(p("E[2]") == U.root_e(1));
  CHECK(p("F[3]") == U.f(1));
  CHECK(p("3/2*v^-2 + v^3") == U.scalar(Fraction(Laurent::parse("3/2*v^-2 + v^3"))));
  CHECK(p("q") == p("v^2"));
  CHECK(p("(E1 + F1)^2") == U.power(U.e(0) + U.f(0), 2));
  CHECK(p("-(E1 - E1)").is_zero());
  CHECK(p("E1*E2 - v^-2*E2*E1") == U.multiply(U.e(0), U.e(1)) - Fraction(Laurent::monomial(-2)) * U.multiply(U.e(1), U.e(0)));
  CHECK(p("(2*K2)^-1") == Fraction(Rational(1, 2)) * U.k({0, -1}));
  CHECK(p("1") == U.one());

  for (const char* bad : {"", "E", "E3", "E[4]", "E1 +", "(E1", "E1)", "x", "E1^-1", "(E1+1)^-2", "1/0", "E1 ** F1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(p(bad), Error);
    try {
      p(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}
