#include "qsp/suites.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "qsp/error.hpp"
#include "qsp/stokes.hpp"

namespace qsp {

namespace {

SuiteResult guarded(const std::string& name, const std::function<std::string()>& body) {
  try {
    return {name, true, body()};
  } catch (const Error& e) {
    return {name, false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string join(const std::vector<int>& w, int offset) {
  std::string s;
  for (size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t] + offset);
  return s;
}

std::string label_of_type_a(int rank) { return "A" + std::to_string(rank); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "braid",   "integrality", "jacobi",  "grading",
                                                 "words",     "generators", "diagram",  "closure", "stokes"};
  return names;
}

std::vector<int> alternative_word(const RootData& rd) {
  // Words are 1-based here.
  const std::string& t = rd.label();
  if (t == "A1xA1") return {2, 1};
  if (t == "A2") return {2, 1, 2};
  if (t == "A3") return {3, 2, 3, 1, 2, 3};
  return {};
}

SuiteResult suite_relations(const QuantumAlgebra& U, const SuiteOptions& opt) {
  return guarded("relations", [&] {
    const RootData& rd = U.root_data();
    const int r = rd.rank();
    int checked = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        const AlgebraElement ki = U.k(rd.simple(i));
        Weight mi = rd.zero();
        mi[i] = -1;
        const Fraction qf(q_pow(rd.form(rd.simple(i), rd.simple(j))));
        if (U.multiply(ki, U.e(j)) != qf * U.multiply(U.e(j), ki) ||
            U.multiply(U.f(j), ki) != qf * U.multiply(ki, U.f(j)))
          fail(ErrorKind::ConfluenceFailure, "K-relation fails for " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        AlgebraElement cross = U.commutator(U.e(i), U.f(j));
        AlgebraElement want;
        if (i == j) want = Fraction(Laurent::q_diff(rd.eps(i))) * (U.k(mi) - ki);
        if (cross != want)
          fail(ErrorKind::ConfluenceFailure, "cross relation fails for " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        checked += 2;
        if (i == j) continue;
        for (bool e_side : {true, false}) {
          auto g = [&](int x) { return e_side ? U.e(x) : U.f(x); };
          AlgebraElement rel;
          if (rd.a(i, j) == 0) {
            rel = U.commutator(g(i), g(j));
          } else {
            const int e = rd.eps(i);
            rel = U.multiply(U.power(g(i), 2), g(j)) - Fraction(q_pow(e) + q_pow(-e)) * U.multiply(U.multiply(g(i), g(j)), g(i)) +
                  U.multiply(g(j), U.power(g(i), 2));
          }
          if (!rel.is_zero()) fail(ErrorKind::ConfluenceFailure, "Serre relation fails for " + std::to_string(i + 1) + "," + std::to_string(j + 1));
          ++checked;
        }
      }
    }
    U.audit_associativity(opt.seed, opt.samples, 6);
    return std::to_string(checked) + " relations, " + std::to_string(opt.samples) + " associativity samples to degree 6";
  });
}

SuiteResult suite_braid(const QuantumAlgebra& U, const SuiteOptions& opt) {
  return guarded("braid", [&] {
    const RootData& rd = U.root_data();
    const int r = rd.rank();
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < r; ++i) {
      Weight mi = rd.zero();
      mi[i] = -1;
      gens.push_back(U.e(i));
      gens.push_back(U.f(i));
      gens.push_back(U.k(rd.simple(i)));
      gens.push_back(U.k(mi));
    }
    int relations = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        std::vector<int> lhs, rhs;
        const int m = rd.a(i, j) == 0 ? 2 : 3;
        for (int t = 0; t < m; ++t) {
          lhs.push_back(t % 2 ? j : i);
          rhs.push_back(t % 2 ? i : j);
        }
        for (const auto& x : gens)
          if (U.braid_word(lhs, x) != U.braid_word(rhs, x))
            fail(ErrorKind::ConfluenceFailure, "braid relation fails for " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        ++relations;
      }
    for (int i = 0; i < r; ++i)
      for (const auto& x : gens)
        if (U.braid(i, U.braid(i, x), true) != x) fail(ErrorKind::ConfluenceFailure, "T_i^-1 T_i is not the identity");
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < opt.samples; ++s) {
      auto x = AlgebraElement::monomial(U.random_monomial(rng, opt.degree));
      for (int i = 0; i < r; ++i)
        for (bool inv : {false, true})
          if (!in_integral_form(U.braid(i, x, inv)))
            fail(ErrorKind::NotIntegral, "braid image leaves the integral form (sample " + std::to_string(s) + ")");
    }
    return std::to_string(relations) + " braid relations on " + std::to_string(gens.size()) + " generators, " +
           std::to_string(opt.samples) + " integral images";
  });
}

SuiteResult suite_integrality(const QuantumAlgebra& U, const SuiteOptions& opt) {
  return guarded("integrality", [&] {
    std::mt19937_64 rng(opt.seed);
    const Laurent vm1 = Laurent::monomial(1) - Laurent(1);
    for (int s = 0; s < opt.samples; ++s) {
      auto x = AlgebraElement::monomial(U.random_monomial(rng, opt.degree));
      auto y = AlgebraElement::monomial(U.random_monomial(rng, opt.degree));
      AlgebraElement c = U.commutator(x, y);
      for (const auto& [m, coeff] : c.terms())
        if (!coeff.is_integral() || !try_exact_quotient(coeff.num(), vm1))
          fail(ErrorKind::NotDivisible, "commutator of sample " + std::to_string(s) + " is not divisible by v - 1");
      semiclassical_limit(c);
    }
    return std::to_string(opt.samples) + " commutators divisible by v - 1";
  });
}

SuiteResult suite_jacobi(const QuantumAlgebra& U, const SuiteOptions&) {
  return guarded("jacobi", [&] {
    PoissonStructure P(U);
    const RootData& rd = U.root_data();
    std::vector<PoissonElement> g;
    for (int k = 0; k < U.num_roots(); ++k) {
      g.push_back(specialize(U.root_e(k)));
      g.push_back(specialize(U.root_f(k)));
    }
    for (int i = 0; i < rd.rank(); ++i) g.push_back(specialize(U.k(rd.simple(i))));
    int checked = 0;
    for (const auto& a : g)
      for (const auto& b : g) {
        if (P.bracket(a, b) != Rational(-1) * P.bracket(b, a)) fail(ErrorKind::MismatchWithLemma, "bracket is not skew");
        for (const auto& c : g)
          if (P.bracket(a, b * c) != P.bracket(a, b) * c + b * P.bracket(a, c))
            fail(ErrorKind::MismatchWithLemma, "Leibniz rule fails");
        checked += 1 + static_cast<int>(g.size());
      }
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = a + 1; b < g.size(); ++b)
        for (size_t c = b + 1; c < g.size(); ++c) {
          auto j = P.bracket(g[a], P.bracket(g[b], g[c])) + P.bracket(g[b], P.bracket(g[c], g[a])) +
                   P.bracket(g[c], P.bracket(g[a], g[b]));
          if (!j.is_zero()) fail(ErrorKind::MismatchWithLemma, "Jacobi identity fails");
          ++checked;
        }
    return std::to_string(checked) + " identities on " + std::to_string(g.size()) + " generators";
  });
}

SuiteResult suite_grading(const QuantumAlgebra& U, const SuiteOptions&) {
  return guarded("grading", [&] {
    GStar G(U);
    const RootData& rd = U.root_data();
    int checked = 0;
    for (int a = 0; a < G.num_variables(); ++a)
      for (int b = 0; b < G.num_variables(); ++b) {
        const CoordElement& x = G.generator_bracket(a, b);
        if (x.is_zero()) continue;
        Grade ga = grade(rd, G.variable(a)), gb = grade(rd, G.variable(b)), gx = grade(rd, x);
        Weight sum = ga.degree;
        for (size_t t = 0; t < sum.size(); ++t) sum[t] += gb.degree[t];
        if (!gx.homogeneous || gx.degree != sum)
          fail(ErrorKind::MismatchWithLemma,
               "{" + G.variable_name(a) + ", " + G.variable_name(b) + "} is not homogeneous of the summed degree");
        ++checked;
      }
    return std::to_string(checked) + " nonzero generator brackets homogeneous";
  });
}

SuiteResult suite_words(const QuantumAlgebra& U, const SuiteOptions& opt) {
  return guarded("words", [&] {
    const RootData& rd = U.root_data();
    std::vector<int> other = alternative_word(rd);
    if (other.empty()) return std::string("single reduced word");
    QuantumAlgebra V(cartan_input(rd.label(), other), opt.extended);
    std::string report;
    if (!reduced_word_consistency(U, V, &report)) fail(ErrorKind::MismatchWithLemma, "bracket tables differ: " + report);
    return "words " + join(rd.word(), 1) + " and " + join(other, 0) + " agree";
  });
}

SuiteResult suite_generators(const SatakeContext& ctx, const SuiteOptions&) {
  return guarded("generators", [&] {
    auto g = specialized_igenerators(ctx);
    return std::to_string(g.size()) + " generators match";
  });
}

SuiteResult suite_diagram(const SatakeContext& ctx, const SuiteOptions& opt) {
  return guarded("diagram", [&] {
    auto r = letzter_project_check(ctx, opt.degree);
    std::ostringstream s;
    s << "degree " << opt.degree << ": " << r.diagram_checks << " diagram checks, " << r.words << " words, dim "
      << r.dimension << ", rank " << r.projected_rank << ", slice " << r.slice_dimension
      << (r.torus_collapsed ? " (torus collapsed)" : "");
    return s.str();
  });
}

SuiteResult suite_closure(const SatakeContext& ctx, const SuiteOptions& opt) {
  return guarded("closure", [&] {
    auto r = invariant_closure(ctx, opt.degree);
    if (!r.matches_lattice) fail(ErrorKind::ClosureEscape, "closure differs from the specialized lattice");
    std::ostringstream s;
    s << "dims";
    for (int d : r.dimensions) s << " " << d;
    s << ", restricted rank " << r.restricted_rank << ", slice " << r.slice_dimension << ", " << r.bracket_checks
      << " stability checks" << (r.torus_collapsed ? " (torus collapsed)" : "");
    return s.str();
  });
}

SuiteResult suite_stokes(const QuantumAlgebra& U, const SuiteOptions& opt) {
  return guarded("stokes", [&] {
    const RootData& rd = U.root_data();
    if (rd.label() != label_of_type_a(rd.rank())) return std::string("not type A");
    StokesContext ctx(rd.rank() + 1, {}, opt.extended);
    int axioms = check_bracket_axioms(ctx);
    auto fac = factorization_sample_check(ctx, opt.samples, opt.seed);
    auto pull = pullback_sample_check(ctx, opt.samples, opt.seed);
    double inv = 0;
    for (int a = 0; a < ctx.num_entries(); ++a)
      inv = std::max(inv, invariance_sample_check(ctx, ctx.entry(a), opt.samples, opt.seed).max_deviation);
    if (fac.max_deviation > 1e-10) fail(ErrorKind::NoConvergence, "factorization residual " + sci(fac.max_deviation));
    if (pull.max_deviation > 1e-9) fail(ErrorKind::MismatchWithLemma, "pullback deviation " + sci(pull.max_deviation));
    if (inv > 1e-9) fail(ErrorKind::MismatchWithLemma, "Stokes entries not invariant: " + sci(inv));
    return "n=" + std::to_string(ctx.n()) + ", " + std::to_string(axioms) + " bracket axioms, residual " +
           sci(fac.max_deviation) + ", pullback " + sci(pull.max_deviation) + ", invariance " + sci(inv);
  });
}

}  // namespace qsp
