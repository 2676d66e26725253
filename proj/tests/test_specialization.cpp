#include "doctest.h"
#include "qsp/error.hpp"
#include "qsp/specialization.hpp"

using namespace qsp;

namespace {

Laurent v(int k = 1) { return Laurent::monomial(k); }

}  // namespace

TEST_CASE("integrality and specialization") {
  QuantumAlgebra U(cartan_input("A1"), false);
  auto E = U.e(0), F = U.f(0), K = U.k({1});
  CHECK(in_integral_form(U.multiply(E, F)));
  CHECK(in_integral_form(U.one()));
  auto bad = Fraction(1) / Fraction(v() - 1) * E;
  CHECK_FALSE(in_integral_form(bad));
  CHECK_THROWS_AS(specialize(bad), Error);
  CHECK(specialize(Fraction(v() - 1) * E).is_zero());
  auto kb = specialize(K);
  REQUIRE(kb.terms().size() == 1);
  CHECK(kb.terms().begin()->first.k == Weight{1});
  CHECK(kb.terms().begin()->second == 1);
}

TEST_CASE("specialization is multiplicative and commutative") {
  for (auto label : {"A1", "A1xA1", "A2"}) {
    QuantumAlgebra U(cartan_input(label), false);
    std::mt19937_64 rng(3);
    for (int s = 0; s < 20; ++s) {
      auto x = AlgebraElement::monomial(U.random_monomial(rng, 3));
      auto y = AlgebraElement::monomial(U.random_monomial(rng, 3)) + Fraction(v(2)) * U.e(0);
      CHECK(specialize(U.multiply(x, y)) == specialize(x) * specialize(y));
      CHECK(specialize(U.multiply(x, y)) == specialize(U.multiply(y, x)));
    }
  }
}

TEST_CASE("sl2 brackets from the commutator") {
  QuantumAlgebra U(cartan_input("A1"), false);
  auto E = specialize(U.e(0)), F = specialize(U.f(0)), K = specialize(U.k({1})), Ki = specialize(U.k({-1}));
  CHECK(poisson_bracket(U, E, F) == Rational(2) * (Ki - K));
  CHECK(poisson_bracket(U, K, E) == Rational(2) * (E * K));
  CHECK(poisson_bracket(U, K, F) == Rational(-2) * (F * K));
  CHECK(poisson_bracket(U, E, E).is_zero());
  // 1/(v-1) E is not integral; v E F commutes to something divisible.
  CHECK_THROWS_AS(semiclassical_limit(Fraction(v()) * U.e(0)), Error);
  try {
    semiclassical_limit(U.e(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
}

TEST_CASE("commutators of integral monomials are divisible by v - 1") {
  for (auto label : {"A1", "A1xA1", "A2"}) {
    QuantumAlgebra U(cartan_input(label), false);
    std::mt19937_64 rng(17);
    for (int s = 0; s < 30; ++s) {
      auto x = AlgebraElement::monomial(U.random_monomial(rng, 4));
      auto y = AlgebraElement::monomial(U.random_monomial(rng, 4));
      CHECK_NOTHROW(semiclassical_limit(U.commutator(x, y)));
    }
  }
}

TEST_CASE("bracket is independent of the lift") {
  QuantumAlgebra U(cartan_input("A2"), false);
  PoissonStructure P(U);
  std::mt19937_64 rng(23);
  for (int s = 0; s < 10; ++s) {
    auto x = AlgebraElement::monomial(U.random_monomial(rng, 2));
    auto z = AlgebraElement::monomial(U.random_monomial(rng, 2));
    auto x2 = x + Fraction(v() - 1) * z;
    auto y = AlgebraElement::monomial(U.random_monomial(rng, 2));
    REQUIRE(specialize(x) == specialize(x2));
    CHECK(semiclassical_limit(U.commutator(x, y)) == semiclassical_limit(U.commutator(x2, y)));
    CHECK(P.bracket(specialize(x), specialize(y)) == semiclassical_limit(U.commutator(x, y)));
  }
}

TEST_CASE("Poisson axioms on A2 generators") {
  QuantumAlgebra U(cartan_input("A2"), false);
  PoissonStructure P(U);
  std::vector<PoissonElement> g;
  for (int k = 0; k < 3; ++k) {
    g.push_back(specialize(U.root_e(k)));
    g.push_back(specialize(U.root_f(k)));
  }
  g.push_back(specialize(U.k({1, 0})));
  g.push_back(specialize(U.k({0, 1})));
  for (const auto& a : g) {
    for (const auto& b : g) {
      CHECK(P.bracket(a, b) == Rational(-1) * P.bracket(b, a));
      for (const auto& c : g) {
        CHECK(P.bracket(a, b * c) == P.bracket(a, b) * c + b * P.bracket(a, c));
      }
    }
  }
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = a + 1; b < g.size(); ++b)
      for (size_t c = b + 1; c < g.size(); ++c) {
        auto j = P.bracket(g[a], P.bracket(g[b], g[c])) + P.bracket(g[b], P.bracket(g[c], g[a])) +
                 P.bracket(g[c], P.bracket(g[a], g[b]));
        CHECK(j.is_zero());
      }
}
