// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "qsp/error.hpp"
#include "qsp/iqsp.hpp"
#include "qsp/stokes.hpp"
#include "qsp/suites.hpp"

using namespace qsp;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& what, double budget_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = {false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    o.passed = false;
    o.detail += " (over the time budget)";
  }
  if (!o.passed) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << "criterion " << id << " | " << (o.passed ? "PASS" : "FAIL") << " | " << what << " | " << o.detail
            << " | " << timing << std::endl;
}

Outcome from_suite(const SuiteResult& r) { return {r.passed, r.detail}; }

}  // namespace

int main() {
  criterion(1, "sl2 bracket table", 1.0, [] {
    QuantumAlgebra U(cartan_input("A1"), false);
    GStar G(U);
    auto xp = G.chi_plus(0), xm = G.chi_minus(0), a = G.alpha({1}), ai = G.alpha({-1});
    bool ok = G.bracket_quantum(xp, xm) == Rational(2) * (ai - a) &&
              G.bracket_quantum(a, xp) == Rational(2) * (xp * a) &&
              G.bracket_quantum(a, xm) == Rational(-2) * (xm * a);
    return Outcome{ok, "{χ+,χ-} = " + to_string(G.bracket_quantum(xp, xm))};
  });

  criterion(2, "commutators divisible by v - 1", 30.0, [] {
    std::string detail;
    bool ok = true;
    for (const char* t : {"A1", "A1xA1", "A2"}) {
      QuantumAlgebra U(cartan_input(t), false);
      auto r = suite_integrality(U, {4, 100, 2024, false});
      ok = ok && r.passed;
      detail += std::string(detail.empty() ? "" : "; ") + t + ": " + r.detail;
    }
    return Outcome{ok, detail};
  });

  criterion(3, "braid relations and integral braid images", 30.0, [] {
    QuantumAlgebra U(cartan_input("A2"), false);
    return from_suite(suite_braid(U, {4, 50, 3, false}));
  });

  criterion(4, "Poisson axioms on A2 generators", 120.0, [] {
    QuantumAlgebra U(cartan_input("A2"), false);
    return from_suite(suite_jacobi(U, {}));
  });

  criterion(5, "reduced-word independence for A2", 60.0, [] {
    QuantumAlgebra U1(cartan_input("A2", {1, 2, 1}), false);
    QuantumAlgebra U2(cartan_input("A2", {2, 1, 2}), false);
    std::string report;
    bool ok = reduced_word_consistency(U1, U2, &report);
    return Outcome{ok, ok ? "simple-generator tables agree" : report};
  });

  criterion(6, "specialized generators of U^i", 60.0, [] {
    std::string detail;
    for (const char* cfg : {"type=A1\n", "type=A2\n", "type=A2\ntau=swap(1,2)\nI_circ_prime=1\n"}) {
      SatakeContext ctx(parse_satake(cfg), false);
      auto g = specialized_igenerators(ctx);
      for (const auto& x : g)
        if (x.value != x.expected) return Outcome{false, x.name + " differs"};
      detail += std::string(detail.empty() ? "" : "; ") + ctx.label() + ": " + std::to_string(g.size());
    }
    return Outcome{true, detail};
  });

  criterion(7, "Letzter map diagram and degreewise bijectivity (A2, AI)", 300.0, [] {
    SatakeContext ctx(parse_satake("type=A2\n"), false);
    std::ostringstream s;
    for (int d = 0; d <= 4; ++d) {
      auto r = letzter_project_check(ctx, d);
      if (r.projected_rank != r.slice_dimension || r.dimension != r.slice_dimension)
        return Outcome{false, "degree " + std::to_string(d) + " rank mismatch"};
      s << (d ? " " : "ranks ") << r.projected_rank;
      if (d == 4) s << ", " << r.diagram_checks << " diagram checks";
    }
    return Outcome{true, s.str()};
  });

  criterion(8, "invariant closure (A2, AI) through degree 4", 300.0, [] {
    SatakeContext ctx(parse_satake("type=A2\n"), false);
    auto r = invariant_closure(ctx, 4);
    std::ostringstream s;
    s << "dims";
    for (int m = 0; m <= 4; ++m) {
      int slice = static_cast<int>(f_slice(ctx.root_data(), m).size());
      if (r.dimensions[m] != slice) return Outcome{false, "degree " + std::to_string(m) + " dimension mismatch"};
      s << " " << r.dimensions[m];
    }
    s << ", " << r.bracket_checks << " stability checks";
    return Outcome{r.matches_lattice, s.str()};
  });

  criterion(9, "Stokes n = 3: brackets, pullbacks, factorization", 60.0, [] {
    StokesContext ctx(3, {}, false);
    bracket_table(ctx);
    int axioms = check_bracket_axioms(ctx);
    auto pull = pullback_sample_check(ctx, 20, 7);
    auto fac = factorization_sample_check(ctx, 20, 7);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d axioms, pullback %.2e, residual %.2e", axioms, pull.max_deviation,
                  fac.max_deviation);
    return Outcome{pull.max_deviation <= 1e-9 && fac.max_deviation <= 1e-10, buf};
  });

  criterion(10, "generator brackets are homogeneous", 60.0, [] {
    std::string detail;
    for (const char* t : {"A1", "A1xA1", "A2"}) {
      QuantumAlgebra U(cartan_input(t), false);
      auto r = suite_grading(U, {});
      if (!r.passed) return Outcome{false, std::string(t) + ": " + r.detail};
      detail += std::string(detail.empty() ? "" : "; ") + t + ": " + r.detail;
    }
    return Outcome{true, detail};
  });

  return failures;
}
