#include "doctest.h"
#include "qsp/gstar.hpp"

using namespace qsp;

TEST_CASE("sl2 coordinate brackets") {
  QuantumAlgebra U(cartan_input("A1"), false);
  GStar G(U);
  auto xp = G.chi_plus(0), xm = G.chi_minus(0), a = G.alpha({1}), ai = G.alpha({-1});
  CHECK(G.bracket(xp, xm) == Rational(2) * (ai - a));
  CHECK(G.bracket(a, xp) == Rational(2) * (xp * a));
  CHECK(G.bracket(a, xm) == Rational(-2) * (xm * a));
  CHECK(G.bracket(xp, xp).is_zero());
  CHECK(to_string(G.bracket(xp, xm)) == "2*a1^-1 - 2*a1");
  CHECK(to_string(G.one()) == "1");
  CHECK(to_string(CoordElement()) == "0");
}

TEST_CASE("phi relabels the specialized basis") {
  QuantumAlgebra U(cartan_input("A2"), false);
  GStar G(U);
  CHECK(phi(specialize(U.e(0))) == G.simple_plus(0));
  CHECK(phi(specialize(U.f(1))) == G.simple_minus(1));
  CHECK(phi(specialize(U.k({1, -1}))) == G.alpha({1, -1}));
  CHECK(phi(specialize(U.one())) == G.one());
  std::mt19937_64 rng(9);
  for (int s = 0; s < 10; ++s) {
    auto x = specialize(AlgebraElement::monomial(U.random_monomial(rng, 3)));
    auto y = specialize(AlgebraElement::monomial(U.random_monomial(rng, 3)));
    CHECK(phi(x * y) == phi(x) * phi(y));
    CHECK(phi_inverse(phi(x)) == x);
  }
}

TEST_CASE("biderivation bracket agrees with the quantum route") {
  QuantumAlgebra U(cartan_input("A2"), false);
  GStar G(U);
  std::mt19937_64 rng(31);
  for (int s = 0; s < 15; ++s) {
    auto x = phi(specialize(AlgebraElement::monomial(U.random_monomial(rng, 3))));
    auto y = phi(specialize(AlgebraElement::monomial(U.random_monomial(rng, 3)))) + G.chi_minus(1);
    CHECK(G.bracket(x, y) == G.bracket_quantum(x, y));
  }
}

TEST_CASE("grading") {
  QuantumAlgebra U(cartan_input("A2"), false);
  GStar G(U);
  const auto& rd = U.root_data();
  auto g = grade(rd, G.simple_minus(0));
  CHECK(g.homogeneous);
  CHECK(g.degree == Weight{1, 0});
  g = grade(rd, G.alpha({1, -1}));
  CHECK(g.degree == Weight{0, 0});
  CHECK_FALSE(grade(rd, G.simple_minus(0) + G.simple_plus(0)).homogeneous);
  for (int a = 0; a < G.num_variables(); ++a) {
    for (int b = 0; b < G.num_variables(); ++b) {
      auto ga = grade(rd, G.variable(a)), gb = grade(rd, G.variable(b));
      auto gab = grade(rd, G.generator_bracket(a, b));
      CHECK(gab.homogeneous);
      if (!gab.zero) {
        Weight sum = ga.degree;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += gb.degree[i];
        CHECK(gab.degree == sum);
      }
    }
  }
}

TEST_CASE("reduced word independence") {
  QuantumAlgebra U1(cartan_input("A2", {1, 2, 1}), false);
  QuantumAlgebra U2(cartan_input("A2", {2, 1, 2}), false);
  std::string report;
  CHECK(reduced_word_consistency(U1, U2, &report));
  CHECK(report.empty());
  CHECK(reduced_word_consistency(U1, U1));
  QuantumAlgebra P1(cartan_input("A1xA1", {1, 2}), false);
  QuantumAlgebra P2(cartan_input("A1xA1", {2, 1}), false);
  CHECK(reduced_word_consistency(P1, P2));
}
