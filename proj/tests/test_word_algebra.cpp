#include "doctest.h"
#include "qsp/word_algebra.hpp"

using namespace qsp;

namespace {

Laurent v(int k = 1) { return Laurent::monomial(k); }

WordElem sub(WordElem a, const WordElem& b) {
  for (const auto& [k, c] : b) {
    a[k] -= c;
    if (a[k].is_zero()) a.erase(k);
  }
  return a;
}

}  // namespace

TEST_CASE("word model: sl2 cross relation") {
  RootData rd(cartan_input("A1"), false);
  WordAlgebra wa(rd);
  auto e = wa.generator({Gen::Kind::E, 0, {}});
  auto f = wa.generator({Gen::Kind::F, 0, {}});
  auto c = sub(wa.multiply(e, f), wa.multiply(f, e));
  WordElem expect;
  expect[{{}, {-1}, {}}] = Fraction(v(2) - v(-2));
  expect[{{}, {1}, {}}] = Fraction(v(-2) - v(2));
  CHECK(c == expect);
  auto k = wa.generator({Gen::Kind::K, 0, {1}});
  WordElem ke;
  ke[{{0}, {1}, {}}] = Fraction(q_pow(2));
  CHECK(wa.multiply(k, e) == ke);
}

TEST_CASE("word model: A2 serre and associativity") {
  RootData rd(cartan_input("A2"), false);
  WordAlgebra wa(rd);
  auto e1 = wa.generator({Gen::Kind::E, 0, {}});
  auto e2 = wa.generator({Gen::Kind::E, 1, {}});
  auto f1 = wa.generator({Gen::Kind::F, 0, {}});
  auto f2 = wa.generator({Gen::Kind::F, 1, {}});
  CHECK(wa.normal_words({2, 1}).size() == 2);
  CHECK(wa.normal_words({1, 1}).size() == 2);
  auto x = wa.multiply(wa.multiply(f1, e1), e2);
  auto y = wa.multiply(wa.multiply(e2, f2), f1);
  CHECK(wa.multiply(wa.multiply(x, y), f1) == wa.multiply(x, wa.multiply(y, f1)));
  CHECK(wa.multiply(e2, f1) == wa.multiply(f1, e2));
}

TEST_CASE("word model: braid operators") {
  RootData rd(cartan_input("A2"), false);
  WordAlgebra wa(rd);
  std::vector<Gen> gens = {{Gen::Kind::E, 0, {}}, {Gen::Kind::E, 1, {}}, {Gen::Kind::F, 0, {}},
                           {Gen::Kind::F, 1, {}}, {Gen::Kind::K, 0, {1, 0}}, {Gen::Kind::K, 0, {0, 1}}};
  for (const auto& g : gens) {
    auto x = wa.generator(g);
    auto l = wa.braid(0, wa.braid(1, wa.braid(0, x)));
    auto r = wa.braid(1, wa.braid(0, wa.braid(1, x)));
    CHECK(l == r);
    for (int i = 0; i < 2; ++i) CHECK(wa.braid(i, wa.braid(i, x), true) == x);
  }
  // T preserves the cross relation: T(E1)T(F1) - T(F1)T(E1) = T((q-q^-1)(K^-1 - K)).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto e = wa.braid(i, wa.generator({Gen::Kind::E, j, {}}));
      auto f = wa.braid(i, wa.generator({Gen::Kind::F, j, {}}));
      WordElem rhs;
      Weight a = rd.simple(j), an = a;
      an[j] = -1;
      rhs[{{}, an, {}}] = Fraction(Laurent::q_diff(1));
      rhs[{{}, a, {}}] = Fraction(-Laurent::q_diff(1));
      CHECK(sub(wa.multiply(e, f), wa.multiply(f, e)) == wa.braid(i, rhs));
    }
  }
}
