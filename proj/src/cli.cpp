#include "qsp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsp/error.hpp"
#include "qsp/expr.hpp"
#include "qsp/stokes.hpp"
#include "qsp/suites.hpp"

namespace qsp {

namespace {

struct RunConfig {
  std::string type = "A1";
  std::string word;
  std::string satake;
  int degree = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  std::string out;
  std::string suite = "all";
  int n = 3;
  std::vector<std::string> exprs;
  bool extended = false;
};

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      w.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, "bad reduced word '" + text + "'");
    }
  }
  return w;
}

void validate_type(const RunConfig& cfg) {
  static const std::vector<std::string> base = {"A1", "A1xA1", "A2"};
  if (std::find(base.begin(), base.end(), cfg.type) != base.end()) return;
  if (cfg.type == "A3") {
    if (cfg.extended) return;
    throw Error(ErrorKind::ConfigError, "type A3 needs QSP_SCOPE=extended");
  }
  throw Error(ErrorKind::ConfigError, "unsupported type '" + cfg.type + "' (supported: A1, A1xA1, A2, A3 with QSP_SCOPE=extended)");
}

std::unique_ptr<QuantumAlgebra> make_algebra(const RunConfig& cfg) {
  validate_type(cfg);
  return std::make_unique<QuantumAlgebra>(cartan_input(cfg.type, parse_word(cfg.word)), cfg.extended);
}

std::unique_ptr<SatakeContext> make_satake(const RunConfig& cfg) {
  SatakeInput in;
  if (!cfg.satake.empty()) {
    std::ifstream file(cfg.satake);
    if (!file) throw Error(ErrorKind::ConfigError, "cannot read Satake file '" + cfg.satake + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    in = parse_satake(buf.str());
  } else {
    in.type = cfg.type;
  }
  RunConfig check = cfg;
  check.type = in.type;
  validate_type(check);
  if (in.word.empty() && !cfg.word.empty()) in.word = parse_word(cfg.word);
  return std::make_unique<SatakeContext>(in, cfg.extended);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string word_text(const std::vector<int>& w) {
  std::string s;
  for (size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t] + 1);
  return s;
}

void print_element(std::ostream& out, const std::string& prefix, const AlgebraElement& x) {
  std::istringstream lines(to_string(x));
  std::string line;
  while (std::getline(lines, line)) out << prefix << " | " << line << "\n";
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  auto U = make_algebra(cfg);
  const RootData& rd = U->root_data();
  out << "type | " << rd.label() << "\n";
  out << "word | " << word_text(rd.word()) << "\n";
  for (int k = 0; k < rd.num_roots(); ++k) out << "root | " << k + 1 << " | " << exps_to_string(rd.root(k)) << "\n";
  U->audit_associativity(cfg.seed, cfg.samples, 6);
  out << "audit | associativity | samples=" << cfg.samples << " | seed=" << cfg.seed << " | ok\n";
  for (const auto& [lk, x] : U->e_table())
    print_element(out, "E[" + std::to_string(lk.first + 1) + "]*E[" + std::to_string(lk.second + 1) + "]", x);
  for (const auto& [lk, x] : U->f_table())
    print_element(out, "F[" + std::to_string(lk.first + 1) + "]*F[" + std::to_string(lk.second + 1) + "]", x);
  for (const auto& [lk, x] : U->cross_table())
    print_element(out, "F[" + std::to_string(lk.first + 1) + "]*E[" + std::to_string(lk.second + 1) + "]", x);
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  auto U = make_algebra(cfg);
  GStar G(*U);
  for (int a = 0; a < G.num_variables(); ++a)
    for (int b = a + 1; b < G.num_variables(); ++b)
      out << G.variable_name(a) << " | " << G.variable_name(b) << " | " << to_string(G.generator_bracket(a, b)) << "\n";
  return 0;
}

int cmd_bracket(const RunConfig& cfg, std::ostream& out) {
  if (cfg.exprs.size() != 2) throw Error(ErrorKind::ConfigError, "bracket needs two expressions");
  auto U = make_algebra(cfg);
  PoissonElement a = specialize(parse_expression(*U, cfg.exprs[0]));
  PoissonElement b = specialize(parse_expression(*U, cfg.exprs[1]));
  out << to_string(phi(poisson_bracket(*U, a, b))) << "\n";
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  std::vector<std::string> chosen;
  if (cfg.suite == "all") {
    chosen = names;
  } else {
    std::stringstream in(cfg.suite);
    std::string s;
    while (std::getline(in, s, ',')) {
      if (std::find(names.begin(), names.end(), s) == names.end())
        throw Error(ErrorKind::ConfigError, "unknown suite '" + s + "'");
      chosen.push_back(s);
    }
  }
  SuiteOptions opt{cfg.degree, cfg.samples, cfg.seed, cfg.extended};
  auto U = make_algebra(cfg);
  std::unique_ptr<SatakeContext> ctx;
  auto satake = [&]() -> const SatakeContext& {
    if (!ctx) ctx = make_satake(cfg);
    return *ctx;
  };
  bool ok = true;
  for (const auto& s : chosen) {
    SuiteResult r;
    if (s == "relations") r = suite_relations(*U, opt);
    else if (s == "braid") r = suite_braid(*U, opt);
    else if (s == "integrality") r = suite_integrality(*U, opt);
    else if (s == "jacobi") r = suite_jacobi(*U, opt);
    else if (s == "grading") r = suite_grading(*U, opt);
    else if (s == "words") r = suite_words(*U, opt);
    else if (s == "generators") r = suite_generators(satake(), opt);
    else if (s == "diagram") r = suite_diagram(satake(), opt);
    else if (s == "closure") r = suite_closure(satake(), opt);
    else r = suite_stokes(*U, opt);
    out << "check | " << r.name << " | " << (r.passed ? "PASS" : "FAIL") << " | " << r.detail << "\n";
    if (!r.passed) {
      err << "error: " << r.detail << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_dubrovin(const RunConfig& cfg, std::ostream& out) {
  StokesContext ctx(cfg.n, parse_word(cfg.word), cfg.extended);
  out << "n | " << ctx.n() << "\n";
  out << "word | " << word_text(ctx.word()) << "\n";
  for (int a = 0; a < ctx.num_entries(); ++a)
    out << "entry | " << ctx.entry_name(a) << " | " << to_string(ctx.entry(a)) << "\n";
  for (const auto& e : bracket_table(ctx))
    out << "bracket | " << ctx.entry_name(e.a) << " | " << ctx.entry_name(e.b) << " | " << ctx.to_string(e.value) << "\n";
  const int axioms = check_bracket_axioms(ctx);
  out << "axioms | skew+jacobi | " << axioms << " | PASS\n";
  bool ok = true;
  auto report = [&](const std::string& name, const SampleReport& r, double tol) {
    bool pass = r.max_deviation <= tol;
    ok = ok && pass;
    out << "numeric | " << name << " | samples=" << r.samples << " | seed=" << r.seed << " | max=" << sci(r.max_deviation)
        << " | tol=" << sci(tol) << " | " << (pass ? "PASS" : "FAIL") << "\n";
  };
  report("factorization", factorization_sample_check(ctx, cfg.samples, cfg.seed), 1e-10);
  report("pullback", pullback_sample_check(ctx, cfg.samples, cfg.seed), 1e-9);
  for (int a = 0; a < ctx.num_entries(); ++a)
    report("invariance " + ctx.entry_name(a), invariance_sample_check(ctx, ctx.entry(a), cfg.samples, cfg.seed), 1e-9);
  if (!ok) throw Error(ErrorKind::MismatchWithLemma, "numeric verification exceeded its tolerance");
  return 0;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
  StokesContext ctx(cfg.n, parse_word(cfg.word), cfg.extended);
  std::mt19937_64 rng(cfg.seed);
  double worst = 0, worst_closed = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    Factorization f = numeric_factorize(ctx, random_group_point(ctx.n(), rng));
    out << "sample | " << s << " | residual=" << sci(f.residual) << " | closed_form=" << sci(f.closed_form_error) << "\n";
    worst = std::max(worst, f.residual);
    worst_closed = std::max(worst_closed, f.closed_form_error);
  }
  bool pass = worst <= 1e-10 && worst_closed <= 1e-9;
  out << "summary | n=" << ctx.n() << " | samples=" << cfg.samples << " | seed=" << cfg.seed
      << " | max_residual=" << sci(worst) << " | max_closed_form=" << sci(worst_closed) << " | "
      << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) throw Error(ErrorKind::NoConvergence, "factorization exceeded its tolerance");
  return 0;
}

}  // namespace

bool extended_scope_from_env() {
  const char* s = std::getenv("QSP_SCOPE");
  return s != nullptr && std::string(s) == "extended";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.extended = extended_scope_from_env();

  CLI::App app{"Exact checks for quantum symmetric pairs and their semiclassical limits", "qsp"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type: A1, A1xA1, A2 (A3 with QSP_SCOPE=extended)");
    sub->add_option("--word", cfg.word, "reduced word of w0, comma separated, 1-based");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--samples", cfg.samples, "number of random samples")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "write output to this file");
  };
  auto* build = app.add_subcommand("build", "build the PBW straightening tables");
  common(build);
  auto* check = app.add_subcommand("check", "run verification suites");
  common(check);
  check->add_option("--suite", cfg.suite, "comma separated suites or 'all'");
  check->add_option("--degree", cfg.degree, "degree bound")->check(CLI::Range(0, 8));
  check->add_option("--satake", cfg.satake, "Satake data file (key=value lines)");
  auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two expressions");
  common(bracket);
  bracket->add_option("exprs", cfg.exprs, "two expressions")->expected(2);
  auto* table = app.add_subcommand("table", "bracket table of the coordinate generators");
  common(table);
  auto* dubrovin = app.add_subcommand("dubrovin", "Stokes bracket table and numeric checks");
  common(dubrovin);
  dubrovin->add_option("--n", cfg.n, "matrix size");
  auto* factorize = app.add_subcommand("factorize", "numeric factorization G* = K-perp P");
  common(factorize);
  factorize->add_option("--n", cfg.n, "matrix size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: ConfigError: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*build) status = cmd_build(cfg, buffer);
    else if (*check) status = cmd_check(cfg, buffer, err);
    else if (*bracket) status = cmd_bracket(cfg, buffer);
    else if (*table) status = cmd_table(cfg, buffer);
    else if (*dubrovin) status = cmd_dubrovin(cfg, buffer);
    else status = cmd_factorize(cfg, buffer);
  } catch (const Error& e) {
    out << buffer.str();
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: ConfigError: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace qsp
