#include "doctest.h"
#include "qsp/error.hpp"
#include "qsp/iqsp.hpp"
#include "qsp/stokes.hpp"

using namespace qsp;

TEST_CASE("Stokes entries for n = 3") {
  StokesContext ctx(3, {1, 2, 1}, false);
  const auto& G = ctx.gstar();
  const auto& S = ctx.stokes();
  for (int i = 0; i < 3; ++i) {
    CHECK(S[i][i] == G.one());
    for (int j = 0; j < i; ++j) CHECK(S[i][j].is_zero());
  }
  // Hand product: u+ = [[1, a1, -a2], [0, 1, a3], [0, 0, 1]], u- its mirror.
  auto a = [&](int k) { return G.chi_plus(k - 1); };
  auto b = [&](int k) { return G.chi_minus(k - 1); };
  auto t1 = G.alpha({-1, 0}), t2 = G.alpha({0, -1});
  CHECK(ctx.entry(ctx.entry_index(0, 1)) == b(1) + a(1) * t1);
  CHECK(ctx.entry(ctx.entry_index(0, 2)) == b(1) * a(3) * t2 - b(2) - a(2) * t1 * t2);
  CHECK(ctx.entry(ctx.entry_index(1, 2)) == b(3) + a(3) * t2);
  CHECK(ctx.entry_name(1) == "s13");
}

TEST_CASE("Stokes entries are the specialized generators with c = -1") {
  StokesContext ctx(3, {}, false);
  SatakeContext pair(parse_satake("type=A2\nsigma_1=-1\nsigma_2=-v^2\n"), false);
  auto gens = specialized_igenerators(pair);
  CHECK(gens[0].value == ctx.entry(ctx.entry_index(0, 1)));
  CHECK(gens[2].value == ctx.entry(ctx.entry_index(1, 2)));
}

TEST_CASE("Dubrovin-Ugaglia brackets") {
  StokesContext ctx(3, {}, false);
  const int m = ctx.num_entries();
  auto s = [&](int i, int j) { return SPoly::variable(m, ctx.entry_index(i - 1, j - 1)); };
  for (int x = 0; x < m; ++x) CHECK(ctx.du_bracket(x, x).is_zero());
  CHECK(ctx.du_bracket(0, 2) == Rational(-1) * (s(1, 2) * s(2, 3)) + Rational(2) * s(1, 3));
  CHECK(ctx.du_bracket(0, 1) == s(1, 2) * s(1, 3) - Rational(2) * s(2, 3));
  CHECK(ctx.to_string(ctx.du_bracket(1, 2)) == "s13*s23 - 2*s12");
  CHECK(ctx.expand(ctx.du_bracket(0, 2)) == ctx.gstar().bracket(ctx.entry(0), ctx.entry(2)));
  CHECK(check_bracket_axioms(ctx) == 9 + 10);

  StokesContext other(3, {2, 1, 2}, false);
  auto t1 = bracket_table(ctx), t2 = bracket_table(other);
  REQUIRE(t1.size() == 6);
  REQUIRE(t2.size() == 6);
  for (size_t k = 0; k < t1.size(); ++k) CHECK(t1[k].value == t2[k].value);
  CHECK(ctx.entry(1) != other.entry(1));
}

TEST_CASE("Stokes scope") {
  auto kind = [](int n, bool ext) {
    try {
      StokesContext ctx(n, {}, ext);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind(9, true) == ErrorKind::ConfigError);
  CHECK(kind(4, false) == ErrorKind::ConfigError);
  CHECK(kind(1, false) == ErrorKind::ConfigError);
}

TEST_CASE("n = 4 table") {
  StokesContext ctx(4, {}, true);
  CHECK(ctx.num_entries() == 6);
  CHECK(check_bracket_axioms(ctx) > 0);
  StokesContext other(4, {2, 1, 2, 3, 2, 1}, true);
  auto t1 = bracket_table(ctx), t2 = bracket_table(other);
  for (size_t k = 0; k < t1.size(); ++k) CHECK(t1[k].value == t2[k].value);
}

TEST_CASE("numeric coordinates round trip") {
  StokesContext ctx(3, {}, false);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 10; ++s) {
    NumericGroupPoint g = random_group_point(3, rng);
    NumericGroupPoint h = from_coordinates(ctx, numeric_coordinates(ctx, g));
    CHECK((g.plus - h.plus).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((g.minus - h.minus).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("factorization G* = K-perp P") {
  StokesContext ctx(3, {}, false);
  std::mt19937_64 rng(11);
  NumericGroupPoint g = random_group_point(3, rng);
  auto fac = numeric_factorize(ctx, g);
  CHECK(fac.residual <= 1e-10);
  CHECK(fac.closed_form_error <= 1e-9);

  // Points of P and of K-perp factor trivially.
  NumericGroupPoint in_p{CMatrix::Identity(3, 3), fac.p.minus};
  CHECK((numeric_factorize(ctx, in_p).k.plus - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  NumericGroupPoint k = random_k_perp(3, rng);
  CHECK((numeric_factorize(ctx, k).p.minus - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);

  CHECK(factorization_sample_check(ctx, 20, 7).max_deviation <= 1e-9);
  CHECK(pullback_sample_check(ctx, 20, 7).max_deviation <= 1e-9);

  NumericGroupPoint bad = g;
  bad.plus(1, 1) = 0;
  bad.minus(1, 1) = 0;
  CHECK_THROWS_AS(numeric_factorize(ctx, bad), Error);
  try {
    numeric_factorize(ctx, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPoint);
  }
  NumericGroupPoint skew = g;
  skew.plus(2, 0) = 1;
  CHECK_THROWS_AS(numeric_factorize(ctx, skew), Error);
}

TEST_CASE("invariance under K-perp") {
  StokesContext ctx(3, {}, false);
  for (int a = 0; a < ctx.num_entries(); ++a)
    CHECK(invariance_sample_check(ctx, ctx.entry(a), 20, 5).max_deviation <= 1e-9);
  CHECK(invariance_sample_check(ctx, ctx.gstar().chi_plus(0), 20, 5).max_deviation > 1e-3);
  CHECK(invariance_sample_check(ctx, ctx.gstar().one(), 5, 5).max_deviation == 0);
  // Same seed, same report.
  CHECK(invariance_sample_check(ctx, ctx.entry(1), 8, 42).max_deviation ==
        invariance_sample_check(ctx, ctx.entry(1), 8, 42).max_deviation);
}
