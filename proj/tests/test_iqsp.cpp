#include <functional>
#include <random>

#include "doctest.h"
#include "qsp/error.hpp"
#include "qsp/iqsp.hpp"

using namespace qsp;

namespace {

const char* kA1 = "type=A1\n";
const char* kA2 = "type=A2\nsigma_1=1\n";
const char* kA2III = "type=A2\ntau=swap(1,2)\nI_black=\nI_circ_prime=1\n";

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("satake configuration") {
  auto in = parse_satake("# comment\ntype = A2\ntau=swap(1,2)\nI_circ_prime=1\nsigma_2=-v^2\n");
  CHECK(in.type == "A2");
  CHECK(in.circ_prime == std::vector<int>{1});
  CHECK(in.sigma.at(2) == -Laurent::monomial(2));
  CHECK(kind_of([] { parse_satake("type A2\n"); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { parse_satake("colour=red\n"); }) == ErrorKind::ConfigError);
  // tau must respect the black nodes, and sigma must be +-q^k.
  CHECK(kind_of([] { SatakeContext(parse_satake("type=A2\ntau=swap(1,2)\nI_black=1\n"), false); }) ==
        ErrorKind::ConfigError);
  CHECK(kind_of([] { SatakeContext(parse_satake("type=A1\nsigma_1=v\n"), false); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { SatakeContext(parse_satake("type=A1\nsigma_1=2\n"), false); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { SatakeContext(parse_satake("type=A2\nI_circ_prime=1\n"), false); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { SatakeContext(parse_satake("type=A1xA1\nI_black=2\nword=1,2\n"), false); }) ==
        ErrorKind::ConfigError);

  SatakeContext minus(parse_satake("type=A1\nsigma_1=-v^-4\n"), false);
  CHECK(minus.c(0) == -1);
}

TEST_CASE("generators of U^i") {
  SatakeContext a1(parse_satake(kA1), false);
  const auto& U = a1.algebra();
  CHECK(a1.ib(0) == U.f(0) - U.multiply(U.e(0), U.k({-1})));
  CHECK(a1.ik(0) == U.one());

  SatakeContext iii(parse_satake(kA2III), false);
  const auto& V = iii.algebra();
  CHECK(iii.ik(0) == V.k({1, -1}));
  CHECK(iii.ik(1) == V.k({-1, 1}));
  CHECK(iii.theta({1, 0}) == Weight{0, -1});
  CHECK(iii.fixed_lattice_basis() == std::vector<Weight>{{-1, 1}});
  CHECK(iii.fixed_component({1, 0}) == Weight{0, 0});
  CHECK(iii.fixed_component({0, 1}) == Weight{-1, 1});

  for (const char* cfg : {kA1, kA2, kA2III, "type=A1xA1\nI_black=2\n", "type=A1\nI_black=1\n"}) {
    SatakeContext ctx(parse_satake(cfg), false);
    for (int i = 0; i < ctx.rank(); ++i) {
      CHECK(in_integral_form(ctx.ib(i)));
      if (ctx.is_black(i)) CHECK(ctx.ib(i) == ctx.algebra().f(i));
    }
  }
}

TEST_CASE("specialized generators match the coordinate list") {
  SatakeContext a1(parse_satake(kA1), false);
  auto g = specialized_igenerators(a1);
  REQUIRE(g.size() == 2);
  CHECK(to_string(g[0].value) == "χ-_1 - χ+_1*a1^-1");

  SatakeContext a2(parse_satake(kA2), false);
  const auto& G = a2.gstar();
  const auto& rd = a2.root_data();
  for (const auto& x : specialized_igenerators(a2)) CHECK(x.value == x.expected);
  const int p2 = rd.simple_root_position(1);
  CHECK(phi(specialize(a2.ib(1))) == G.chi_minus(p2) - G.chi_plus(p2) * G.alpha({0, -1}));

  SatakeContext iii(parse_satake(kA2III), false);
  auto h = specialized_igenerators(iii);
  REQUIRE(h.size() == 4);
  CHECK(h[1].value == iii.gstar().alpha({1, -1}));
  const int p1 = iii.root_data().simple_root_position(0);
  CHECK(h[0].value == iii.gstar().chi_minus(p1) - iii.gstar().chi_plus(iii.root_data().simple_root_position(1)) *
                                                      iii.gstar().alpha({-1, 0}));

  // A negative sign parameter flips the chi+ term.
  SatakeContext neg(parse_satake("type=A1\nsigma_1=-1\n"), false);
  CHECK(to_string(specialized_igenerators(neg)[0].value) == "χ-_1 + χ+_1*a1^-1");

  SatakeContext black(parse_satake("type=A1xA1\nI_black=2\n"), false);
  auto b = specialized_igenerators(black);
  CHECK(b.size() == 6);
  CHECK(b[2].name == "E2");
  CHECK(b[2].value == black.gstar().simple_plus(1));
}

TEST_CASE("leading grade of the b generators") {
  for (const char* cfg : {kA1, kA2, kA2III}) {
    SatakeContext ctx(parse_satake(cfg), false);
    const auto& rd = ctx.root_data();
    const auto& G = ctx.gstar();
    for (int i = 0; i < ctx.rank(); ++i) {
      CoordElement b = phi(specialize(ctx.ib(i)));
      CoordElement lead = G.simple_minus(i);
      auto g_lead = grade(rd, lead);
      REQUIRE(g_lead.homogeneous);
      CHECK(g_lead.degree == rd.simple(i));
      auto g_rest = grade(rd, b - lead);
      REQUIRE(g_rest.homogeneous);
      int height = 0;
      for (int c : g_rest.degree) height += c;
      CHECK(height < 1);
    }
  }
}

TEST_CASE("projection after specialization is multiplicative") {
  for (const char* cfg : {kA2, kA2III, "type=A1xA1\nI_black=2\n"}) {
    SatakeContext ctx(parse_satake(cfg), false);
    const auto& U = ctx.algebra();
    std::mt19937_64 rng(17);
    for (int s = 0; s < 25; ++s) {
      auto x = specialize(AlgebraElement::monomial(U.random_monomial(rng, 3)));
      auto y = specialize(AlgebraElement::monomial(U.random_monomial(rng, 3)));
      CHECK(ctx.parabolic_project(x * y) == ctx.parabolic_project(x) * ctx.parabolic_project(y));
      CHECK(ctx.iota_star(phi(x) * phi(y)) == ctx.iota_star(phi(x)) * ctx.iota_star(phi(y)));
    }
  }
}

TEST_CASE("Letzter map, type AI") {
  SatakeContext a1(parse_satake(kA1), false);
  CHECK(phi(specialize(a1.parabolic_project(a1.ib(0)))) == a1.gstar().simple_minus(0));
  auto r0 = letzter_project_check(a1, 0);
  CHECK(r0.dimension == 1);
  CHECK(r0.slice_dimension == 1);
  auto r1 = letzter_project_check(a1, 4);
  CHECK(r1.dimension == 5);
  CHECK(r1.projected_rank == 5);

  SatakeContext a2(parse_satake(kA2), false);
  auto r3 = letzter_project_check(a2, 3);
  CHECK(r3.projected_rank == r3.slice_dimension);
  auto r4 = letzter_project_check(a2, 4);
  CHECK(r4.words == 31);
  CHECK(r4.dimension == 22);
  CHECK(r4.projected_rank == 22);
  CHECK(r4.slice_dimension == 22);
  CHECK(r4.saturations > 0);
  CHECK_FALSE(r4.torus_collapsed);
  CHECK(r4.diagram_checks > 0);
}

TEST_CASE("Letzter map, quasi-split AIII and black nodes") {
  SatakeContext iii(parse_satake(kA2III), false);
  auto r = letzter_project_check(iii, 3);
  CHECK(r.torus_collapsed);
  CHECK(r.projected_rank == r.dimension);
  CHECK(r.slice_dimension == 13);

  SatakeContext black(parse_satake("type=A1xA1\nI_black=2\n"), false);
  CHECK(black.black_word() == std::vector<int>{1});
  CHECK_NOTHROW(letzter_project_check(black, 2));
  SatakeContext all_black(parse_satake("type=A1\nI_black=1\n"), false);
  CHECK_NOTHROW(letzter_project_check(all_black, 2));
}

TEST_CASE("Poisson closure of the generators") {
  SatakeContext a1(parse_satake(kA1), false);
  auto b1 = phi(specialize(a1.ib(0)));
  CHECK(a1.gstar().bracket(b1, b1).is_zero());
  auto c1 = invariant_closure(a1, 3);
  CHECK(c1.dimensions == std::vector<int>{1, 2, 3, 4});

  SatakeContext a2(parse_satake(kA2), false);
  auto c = invariant_closure(a2, 4);
  CHECK(c.dimensions == std::vector<int>{1, 3, 7, 13, 22});
  CHECK(c.restricted_rank == 22);
  CHECK(c.slice_dimension == 22);
  CHECK(c.matches_lattice);
  CHECK(c.bracket_checks > 0);

  // {b1, b2} is not a polynomial in b1, b2 of degree <= 2.
  auto b = phi(specialize(a2.ib(0))), bb = phi(specialize(a2.ib(1)));
  CHECK_FALSE(a2.gstar().bracket(b, bb).is_zero());
  CHECK(invariant_closure(a2, 2).dimensions == std::vector<int>{1, 3, 7});

  SatakeContext iii(parse_satake(kA2III), false);
  auto d = invariant_closure(iii, 3);
  CHECK(d.torus_collapsed);
  CHECK(d.matches_lattice);
  CHECK(d.restricted_rank == d.dimensions.back());
}

TEST_CASE("degree slice") {
  QuantumAlgebra U(cartan_input("A2"), false);
  CHECK(f_slice(U.root_data(), 0).size() == 1);
  CHECK(f_slice(U.root_data(), 1).size() == 3);
  CHECK(f_slice(U.root_data(), 2).size() == 7);
}
