#include "doctest.h"
#include "qsp/error.hpp"
#include "qsp/qalgebra.hpp"

using namespace qsp;

namespace {

Laurent v(int k = 1) { return Laurent::monomial(k); }

bool integral(const AlgebraElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!c.is_integral()) return false;
  return true;
}

}  // namespace

TEST_CASE("A1 relations in rescaled generators") {
  QuantumAlgebra U(cartan_input("A1"), false);
  auto E = U.e(0), F = U.f(0), K = U.k({1}), Ki = U.k({-1});
  CHECK(U.e_table().empty());
  CHECK(U.commutator(E, F) == Fraction(v(2) - v(-2)) * (Ki - K));
  CHECK(U.multiply(K, E) == Fraction(q_pow(2)) * U.multiply(E, K));
  CHECK(U.multiply(K, F) == Fraction(q_pow(-2)) * U.multiply(F, K));
  CHECK(U.multiply(K, Ki) == U.one());
  CHECK(U.multiply(E, U.one()) == E);
  CHECK(U.braid(0, K) == Ki);
  CHECK(U.braid(0, U.one()) == U.one());
  CHECK(U.counit(E).is_zero());
  CHECK(U.counit(K).is_one());
  auto x = U.one() + Fraction(v() - 1) * U.multiply(E, F);
  CHECK(U.counit(x).is_one());
}

TEST_CASE("A2 root data and word validation") {
  QuantumAlgebra U(cartan_input("A2"), false);
  REQUIRE(U.num_roots() == 3);
  CHECK(U.root_data().root(0) == Weight{1, 0});
  CHECK(U.root_data().root(1) == Weight{1, 1});
  CHECK(U.root_data().root(2) == Weight{0, 1});
  CHECK_THROWS_AS(QuantumAlgebra(cartan_input("A2", {1, 2, 2}), false), Error);
  CHECK_THROWS_AS(QuantumAlgebra(cartan_input("A3"), false), Error);
  CHECK_THROWS_AS(cartan_input("E8"), Error);
}

TEST_CASE("A2 defining relations normalize to zero") {
  QuantumAlgebra U(cartan_input("A2"), false);
  const Fraction qq(q_pow(1) + q_pow(-1));
  for (int i = 0; i < 2; ++i) {
    int j = 1 - i;
    auto Ei = U.e(i), Ej = U.e(j), Fi = U.f(i), Fj = U.f(j);
    auto serre_e = U.multiply(U.multiply(Ei, Ei), Ej) - qq * U.multiply(U.multiply(Ei, Ej), Ei) +
                   U.multiply(Ej, U.multiply(Ei, Ei));
    auto serre_f = U.multiply(U.multiply(Fi, Fi), Fj) - qq * U.multiply(U.multiply(Fi, Fj), Fi) +
                   U.multiply(Fj, U.multiply(Fi, Fi));
    CHECK(serre_e.is_zero());
    CHECK(serre_f.is_zero());
    CHECK(U.commutator(Ei, Fj).is_zero());
    Weight ai = U.root_data().simple(i), ain = ai;
    ain[i] = -1;
    CHECK(U.commutator(Ei, Fi) == Fraction(Laurent::q_diff(1)) * (U.k(ain) - U.k(ai)));
    CHECK(U.multiply(U.k(ai), Ej) == Fraction(q_pow(-1)) * U.multiply(Ej, U.k(ai)));
  }
}

TEST_CASE("A2 straightening tables are integral") {
  QuantumAlgebra U(cartan_input("A2"), false);
  for (const auto& [key, x] : U.e_table()) CHECK(integral(x));
  for (const auto& [key, x] : U.f_table()) CHECK(integral(x));
  for (const auto& [key, x] : U.cross_table()) CHECK(integral(x));
}

TEST_CASE("associativity audit to degree 6") {
  for (auto label : {"A1", "A1xA1", "A2"}) {
    QuantumAlgebra U(cartan_input(label), false);
    CHECK_NOTHROW(U.audit_associativity(11, 40, 6));
  }
}

TEST_CASE("braid operators on A2") {
  QuantumAlgebra U(cartan_input("A2"), false);
  std::vector<AlgebraElement> gens = {U.e(0), U.e(1), U.f(0), U.f(1), U.k({1, 0}), U.k({0, 1})};
  for (const auto& x : gens) {
    CHECK(U.braid_word({0, 1, 0}, x) == U.braid_word({1, 0, 1}, x));
    for (int i = 0; i < 2; ++i) CHECK(U.braid(i, U.braid(i, x), true) == x);
  }
  // T_i is multiplicative on a sample product.
  auto xy = U.multiply(U.root_e(1), U.root_f(1));
  CHECK(U.braid(0, xy) == U.multiply(U.braid(0, U.root_e(1)), U.braid(0, U.root_f(1))));
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    auto m = AlgebraElement::monomial(U.random_monomial(rng, 4));
    CHECK(integral(U.braid(s % 2, m)));
  }
}
