#include "qsp/iqsp.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, "bad integer '" + item + "'");
    }
  }
  return out;
}

SparseVec<PBWMonomial, Rational> as_vec(const PoissonElement& p) {
  return {p.terms().begin(), p.terms().end()};
}

SparseVec<CoordKey, Rational> as_vec(const CoordElement& p) { return {p.terms().begin(), p.terms().end()}; }

Laurent v_minus_one() { return Laurent::monomial(1) - Laurent(1); }

AlgebraElement divide_by_v_minus_one(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    if (!c.is_integral()) throw Error(ErrorKind::NotIntegral, "lattice element is not integral");
    out.add(m, Fraction(exact_quotient(c.num(), v_minus_one())));
  }
  return out;
}

PoissonElement collapse_torus(const PoissonElement& p) {
  PoissonElement out;
  for (const auto& [m, c] : p.terms()) {
    PBWMonomial t = m;
    std::fill(t.k.begin(), t.k.end(), 0);
    out.add(t, c);
  }
  return out;
}

CoordElement collapse_torus(const CoordElement& p) {
  CoordElement out;
  for (const auto& [key, c] : p.terms()) {
    CoordKey t = key;
    std::fill(t.alpha.begin(), t.alpha.end(), 0);
    out.add(t, c);
  }
  return out;
}

// All reduced words of w0, in lexicographic order.
void reduced_words(const RootData& rd, std::vector<int>& cur, std::set<Weight>& used,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == rd.num_roots()) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < rd.rank(); ++i) {
    Weight beta = rd.simple(i);
    for (size_t j = cur.size(); j-- > 0;) beta = rd.reflect(cur[j], beta);
    if (std::any_of(beta.begin(), beta.end(), [](int c) { return c < 0; }) || used.count(beta)) continue;
    used.insert(beta);
    cur.push_back(i);
    reduced_words(rd, cur, used, out);
    cur.pop_back();
    used.erase(beta);
  }
}

}  // namespace

SatakeInput parse_satake(std::string_view text) {
  SatakeInput in;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "type") {
      in.type = value;
    } else if (key == "tau") {
      if (value == "id" || value.empty()) {
        in.tau.clear();
      } else if (value.rfind("swap(", 0) == 0 && value.back() == ')') {
        auto pair = parse_list(value.substr(5, value.size() - 6));
        if (pair.size() != 2) throw Error(ErrorKind::ConfigError, "swap needs two nodes");
        in.tau = {-pair[0], -pair[1]};  // resolved once the rank is known
      } else {
        in.tau = parse_list(value);
      }
    } else if (key == "I_black") {
      in.black = parse_list(value);
    } else if (key == "I_circ_prime") {
      in.circ_prime = parse_list(value);
    } else if (key == "word") {
      in.word = parse_list(value);
    } else if (key.rfind("sigma_", 0) == 0) {
      auto node = parse_list(key.substr(6));
      if (node.size() != 1) throw Error(ErrorKind::ConfigError, "bad key '" + key + "'");
      try {
        in.sigma[node[0]] = Laurent::parse(value);
      } catch (const Error& e) {
        throw Error(ErrorKind::ConfigError, "sigma_" + std::to_string(node[0]) + ": " + e.what());
      }
    } else {
      throw Error(ErrorKind::ConfigError, "unknown key '" + key + "'");
    }
  }
  return in;
}

SatakeContext::SatakeContext(const SatakeInput& input, bool allow_extended) {
  CartanInput base = cartan_input(input.type);
  const int r = static_cast<int>(base.matrix.size());
  auto node = [&](int x, const char* what) {
    if (x < 1 || x > r) throw Error(ErrorKind::ConfigError, std::string(what) + " node " + std::to_string(x) + " out of range");
    return x - 1;
  };

  black_.assign(r, false);
  for (int x : input.black) black_[node(x, "I_black")] = true;

  tau_.resize(r);
  for (int i = 0; i < r; ++i) tau_[i] = i;
  if (input.tau.size() == 2 && input.tau[0] < 0) {
    int a = node(-input.tau[0], "tau"), b = node(-input.tau[1], "tau");
    std::swap(tau_[a], tau_[b]);
  } else if (!input.tau.empty()) {
    if (static_cast<int>(input.tau.size()) != r) throw Error(ErrorKind::ConfigError, "tau must list every node");
    for (int i = 0; i < r; ++i) tau_[i] = node(input.tau[i], "tau");
  }
  for (int i = 0; i < r; ++i) {
    if (tau_[tau_[i]] != i) throw Error(ErrorKind::ConfigError, "tau is not an involution");
    if (black_[tau_[i]] != black_[i]) throw Error(ErrorKind::ConfigError, "tau does not preserve I_black");
    for (int j = 0; j < r; ++j)
      if (base.matrix[tau_[i]][tau_[j]] != base.matrix[i][j])
        throw Error(ErrorKind::ConfigError, "tau is not a diagram automorphism");
  }

  circ_prime_.assign(r, false);
  if (input.circ_prime.empty()) {
    for (int i = 0; i < r; ++i)
      if (!black_[i] && i <= tau_[i]) circ_prime_[i] = true;
  } else {
    for (int x : input.circ_prime) circ_prime_[node(x, "I_circ_prime")] = true;
  }
  for (int i = 0; i < r; ++i) {
    if (circ_prime_[i] && black_[i]) throw Error(ErrorKind::ConfigError, "I_circ_prime must lie in I_circ");
    if (!black_[i] && (circ_prime_[i] == circ_prime_[tau_[i]]) && tau_[i] != i)
      throw Error(ErrorKind::ConfigError, "I_circ_prime needs exactly one node per tau-orbit");
    if (!black_[i] && tau_[i] == i && !circ_prime_[i])
      throw Error(ErrorKind::ConfigError, "I_circ_prime needs exactly one node per tau-orbit");
  }

  sigma_.assign(r, Laurent(1));
  c_.assign(r, 1);
  for (const auto& [x, s] : input.sigma) {
    int i = node(x, "sigma");
    if (black_[i]) throw Error(ErrorKind::ConfigError, "sigma is only defined on I_circ");
    if (!s.is_monomial() || s.min_exponent() % 2 != 0 || abs(s.coeff(s.min_exponent())) != 1)
      throw Error(ErrorKind::ConfigError, "sigma_" + std::to_string(x) + " must be +-q^k");
    sigma_[i] = s;
    c_[i] = s.eval_at_one() > 0 ? 1 : -1;
  }

  // The word of w0 must start with a reduced word of w_black.
  RootData probe(base, allow_extended);
  int n_black = 0;
  for (const auto& beta : probe.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < r; ++i)
      if (beta[i] != 0 && !black_[i]) inside = false;
    if (inside) ++n_black;
  }
  auto prefix_black = [&](const std::vector<int>& w0) {
    for (int t = 0; t < n_black; ++t)
      if (!black_[w0[t]]) return false;
    return true;
  };
  std::vector<int> word;
  if (!input.word.empty()) {
    for (int x : input.word) word.push_back(node(x, "word"));
    if (static_cast<int>(word.size()) < n_black || !prefix_black(word))
      throw Error(ErrorKind::ConfigError, "the word must begin with a reduced word of w_black");
  } else {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::set<Weight> used;
    reduced_words(probe, cur, used, all);
    auto it = std::find_if(all.begin(), all.end(), prefix_black);
    if (it == all.end()) throw Error(ErrorKind::ConfigError, "no reduced word of w0 starts with w_black");
    word = *it;
  }
  std::vector<int> word1;
  for (int x : word) word1.push_back(x + 1);
  U_ = std::make_unique<QuantumAlgebra>(cartan_input(input.type, word1), allow_extended);
  G_ = std::make_unique<GStar>(*U_);
  black_word_.assign(word.begin(), word.begin() + n_black);

  // Q^theta basis and the inverse of [basis | alpha_i (i in I_circ')].
  const RootData& rd = U_->root_data();
  for (int i = 0; i < r; ++i) {
    if (black_[i]) {
      if (theta(rd.simple(i)) != rd.simple(i)) throw Error(ErrorKind::ConfigError, "theta does not fix a black root");
      fixed_basis_.push_back(rd.simple(i));
    } else if (!circ_prime_[i]) {
      Weight mu = rd.simple(i), t = theta(mu);
      for (int j = 0; j < r; ++j) mu[j] += t[j];
      fixed_basis_.push_back(mu);
    }
  }
  std::vector<Weight> cols = fixed_basis_;
  for (int i = 0; i < r; ++i)
    if (circ_prime_[i]) cols.push_back(rd.simple(i));
  if (static_cast<int>(cols.size()) != r) throw Error(ErrorKind::ConfigError, "Q^theta and Q' do not span Q");
  // Gauss-Jordan on [M | I] with M[j][c] = cols[c][j].
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(2 * r));
  for (int j = 0; j < r; ++j) {
    for (int c = 0; c < r; ++c) m[j][c] = cols[c][j];
    m[j][r + j] = 1;
  }
  for (int c = 0; c < r; ++c) {
    int p = c;
    while (p < r && m[p][c] == 0) ++p;
    if (p == r) throw Error(ErrorKind::ConfigError, "Q^theta and Q' do not span Q");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int j = 0; j < r; ++j) {
      if (j == c || m[j][c] == 0) continue;
      Rational f = m[j][c];
      for (int t = 0; t < 2 * r; ++t) m[j][t] -= f * m[c][t];
    }
  }
  decompose_.assign(r, std::vector<Rational>(r));
  for (int c = 0; c < r; ++c)
    for (int j = 0; j < r; ++j) {
      decompose_[c][j] = m[c][r + j];
      if (decompose_[c][j].get_den() != 1) throw Error(ErrorKind::ConfigError, "Q^theta + Q' is not all of Q");
    }
}

std::string SatakeContext::label() const {
  std::ostringstream out;
  out << root_data().label() << " black={";
  bool first = true;
  for (int i = 0; i < rank(); ++i)
    if (black_[i]) {
      out << (first ? "" : ",") << i + 1;
      first = false;
    }
  out << "} tau=(";
  for (int i = 0; i < rank(); ++i) out << (i ? "," : "") << tau_[i] + 1;
  out << ")";
  return out.str();
}

Weight SatakeContext::theta(const Weight& mu) const {
  const RootData& rd = root_data();
  Weight t = rd.zero();
  for (int i = 0; i < rank(); ++i) t[tau_[i]] = mu[i];
  for (size_t j = black_word_.size(); j-- > 0;) t = rd.reflect(black_word_[j], t);
  for (int& x : t) x = -x;
  return t;
}

Weight SatakeContext::fixed_component(const Weight& mu) const {
  const int r = rank();
  Weight out = root_data().zero();
  for (size_t c = 0; c < fixed_basis_.size(); ++c) {
    Rational coeff = 0;
    for (int j = 0; j < r; ++j) coeff += decompose_[c][j] * mu[j];
    int k = static_cast<int>(coeff.get_num().get_si());
    for (int j = 0; j < r; ++j) out[j] += k * fixed_basis_[c][j];
  }
  return out;
}

AlgebraElement SatakeContext::ib(int i) const {
  const auto& U = *U_;
  if (black_[i]) return U.f(i);
  Weight ai = root_data().simple(i);
  for (int& x : ai) x = -x;
  AlgebraElement t = U.braid_word(black_word_, U.e(tau_[i]));
  return U.f(i) - Fraction(sigma_[i]) * U.multiply(t, U.k(ai));
}

AlgebraElement SatakeContext::ik(int i) const {
  Weight mu = root_data().simple(i);
  mu[tau_[i]] -= 1;
  return U_->k(mu);
}

AlgebraElement SatakeContext::parabolic_project(const AlgebraElement& x) const {
  const int nb = black_length();
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    bool killed = false;
    for (size_t k = nb; k < m.e.size(); ++k)
      if (m.e[k] != 0) killed = true;
    if (killed) continue;
    out.add({m.e, fixed_component(m.k), m.f}, c);
  }
  return out;
}

PoissonElement SatakeContext::parabolic_project(const PoissonElement& x) const {
  const int nb = black_length();
  PoissonElement out;
  for (const auto& [m, c] : x.terms()) {
    bool killed = false;
    for (size_t k = nb; k < m.e.size(); ++k)
      if (m.e[k] != 0) killed = true;
    if (killed) continue;
    out.add({m.e, fixed_component(m.k), m.f}, c);
  }
  return out;
}

CoordElement SatakeContext::iota_star(const CoordElement& x) const {
  const int nb = black_length();
  CoordElement out;
  for (const auto& [key, c] : x.terms()) {
    bool killed = false;
    for (size_t k = nb; k < key.plus.size(); ++k)
      if (key.plus[k] != 0) killed = true;
    if (killed) continue;
    out.add({key.plus, fixed_component(key.alpha), key.minus}, c);
  }
  return out;
}

std::vector<IGenerator> specialized_igenerators(const SatakeContext& ctx) {
  const auto& U = ctx.algebra();
  const auto& G = ctx.gstar();
  const auto& rd = ctx.root_data();
  std::vector<IGenerator> out;
  auto add = [&](std::string name, AlgebraElement q, CoordElement expected) {
    if (!in_integral_form(q)) throw Error(ErrorKind::MismatchWithLemma, name + " is not in the integral form");
    CoordElement value = phi(specialize(q));
    if (value != expected)
      throw Error(ErrorKind::MismatchWithLemma, name + " specializes to " + to_string(value) + ", expected " +
                                                    to_string(expected));
    out.push_back({std::move(name), std::move(q), std::move(value), std::move(expected)});
  };
  for (int i = 0; i < ctx.rank(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (ctx.is_black(i)) {
      Weight a = rd.simple(i), ai = a;
      ai[i] = -1;
      add("E" + idx, U.e(i), G.simple_plus(i));
      add("F" + idx, U.f(i), G.simple_minus(i));
      add("K" + idx, U.k(a), G.alpha(a));
      add("K" + idx + "^-1", U.k(ai), G.alpha(ai));
      continue;
    }
    // T_{w_black}(chi+_{tau i}) is the coordinate of the root w_black(alpha_{tau i}).
    AlgebraElement t = U.braid_word(ctx.black_word(), U.e(ctx.tau(i)));
    CoordElement t_chi;
    if (t.size() == 1 && t.terms().begin()->second.is_one() && t.terms().begin()->first.degree() == 1) {
      const auto& e = t.terms().begin()->first.e;
      t_chi = G.chi_plus(static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin()));
    } else {
      t_chi = phi(specialize(t));
    }
    Weight ai = rd.zero();
    ai[i] = -1;
    add("B" + idx, ctx.ib(i), G.simple_minus(i) - Rational(ctx.c(i)) * (t_chi * G.alpha(ai)));
    Weight k = rd.simple(i);
    k[ctx.tau(i)] -= 1;
    add("k" + idx, ctx.ik(i), G.alpha(k));
  }
  return out;
}

std::vector<std::pair<std::string, CoordElement>> poisson_generators(const SatakeContext& ctx) {
  const auto& G = ctx.gstar();
  const auto& rd = ctx.root_data();
  std::vector<std::pair<std::string, CoordElement>> out;
  for (int i = 0; i < ctx.rank(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (ctx.is_black(i)) {
      Weight a = rd.simple(i), ai = a;
      ai[i] = -1;
      out.emplace_back("χ+_" + idx, G.simple_plus(i));
      out.emplace_back("χ-_" + idx, G.simple_minus(i));
      out.emplace_back("a" + idx, G.alpha(a));
      out.emplace_back("a" + idx + "^-1", G.alpha(ai));
    } else {
      out.emplace_back("b" + idx, phi(specialize(ctx.ib(i))));
      if (!ctx.is_circ_prime(i)) {
        Weight k = rd.simple(i);
        k[ctx.tau(i)] -= 1;
        Weight ki = k;
        for (int& x : ki) x = -x;
        out.emplace_back("k" + idx, G.alpha(k));
        out.emplace_back("k" + idx + "^-1", G.alpha(ki));
      }
    }
  }
  return out;
}

std::vector<Exps> f_slice(const RootData& rd, int degree) {
  std::vector<Exps> out;
  Exps cur(rd.num_roots(), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == rd.num_roots()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a * rd.height(k) <= left; ++a) {
      cur[k] = a;
      rec(k + 1, left - a * rd.height(k));
    }
    cur[k] = 0;
  };
  rec(0, degree);
  return out;
}

namespace {

// Generators of U^i used for monomials, with the quantum elements.
std::vector<std::pair<std::string, AlgebraElement>> i_alphabet(const SatakeContext& ctx) {
  const auto& U = ctx.algebra();
  const auto& rd = ctx.root_data();
  std::vector<std::pair<std::string, AlgebraElement>> out;
  for (int i = 0; i < ctx.rank(); ++i) {
    const std::string idx = std::to_string(i + 1);
    out.emplace_back("B" + idx, ctx.ib(i));
    if (ctx.is_black(i)) {
      Weight a = rd.simple(i), ai = a;
      ai[i] = -1;
      out.emplace_back("E" + idx, U.e(i));
      out.emplace_back("K" + idx, U.k(a));
      out.emplace_back("K" + idx + "^-1", U.k(ai));
    } else if (!ctx.is_circ_prime(i)) {
      Weight k = rd.simple(i);
      k[ctx.tau(i)] -= 1;
      Weight ki = k;
      for (int& x : ki) x = -x;
      out.emplace_back("k" + idx, U.k(k));
      out.emplace_back("k" + idx + "^-1", U.k(ki));
    }
  }
  return out;
}

struct Lattice {
  int words = 0;
  int saturations = 0;
  std::vector<AlgebraElement> rows;  // integral, with independent specializations
};

// Integral basis (saturated at v = 1) of the span of i-monomials of length <= d.
Lattice i_lattice(const SatakeContext& ctx, int degree) {
  const auto& U = ctx.algebra();
  auto alphabet = i_alphabet(ctx);
  Lattice lat;
  std::vector<AlgebraElement> level{U.one()};
  std::vector<AlgebraElement> all{U.one()};
  for (int d = 1; d <= degree; ++d) {
    std::vector<AlgebraElement> next;
    for (const auto& w : level)
      for (const auto& [name, g] : alphabet) next.push_back(U.multiply(w, g));
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  lat.words = static_cast<int>(all.size());

  Echelon<PBWMonomial, Fraction> span;
  for (auto& x : all)
    if (span.insert(x.terms())) lat.rows.push_back(x);

  for (bool changed = true; changed;) {
    changed = false;
    TrackedEchelon<PBWMonomial> ech;
    for (int j = 0; j < static_cast<int>(lat.rows.size()); ++j) {
      auto dep = ech.insert(as_vec(specialize(lat.rows[j])), j);
      if (!dep) continue;
      AlgebraElement s;
      for (const auto& [t, lambda] : *dep) s += Fraction(lambda) * lat.rows[t];
      lat.rows[j] = divide_by_v_minus_one(s);
      ++lat.saturations;
      changed = true;
      break;
    }
  }
  return lat;
}

}  // namespace

LetzterReport letzter_project_check(const SatakeContext& ctx, int degree) {
  const auto& U = ctx.algebra();
  const auto& rd = ctx.root_data();
  LetzterReport rep;

  // Diagram on generators of the specialized algebra and on the i-generators.
  std::vector<AlgebraElement> gens;
  for (int k = 0; k < U.num_roots(); ++k) {
    gens.push_back(U.root_e(k));
    gens.push_back(U.root_f(k));
  }
  for (int i = 0; i < ctx.rank(); ++i) {
    Weight a = rd.simple(i), ai = a;
    ai[i] = -1;
    gens.push_back(U.k(a));
    gens.push_back(U.k(ai));
    gens.push_back(ctx.ib(i));
    if (!ctx.is_black(i)) gens.push_back(ctx.ik(i));
  }
  for (const auto& x : gens) {
    CoordElement lhs = phi(specialize(ctx.parabolic_project(x)));
    CoordElement rhs = ctx.iota_star(phi(specialize(x)));
    if (lhs != rhs)
      throw Error(ErrorKind::DiagramFailure, "pi and iota* disagree: " + to_string(lhs) + " vs " + to_string(rhs));
    ++rep.diagram_checks;
  }

  Lattice lat = i_lattice(ctx, degree);
  rep.words = lat.words;
  rep.dimension = static_cast<int>(lat.rows.size());
  rep.saturations = lat.saturations;

  TrackedEchelon<PBWMonomial> image, collapsed;
  int idx = 0;
  for (const auto& x : lat.rows) {
    PoissonElement p = ctx.parabolic_project(specialize(x));
    image.insert(as_vec(p), idx);
    collapsed.insert(as_vec(collapse_torus(p)), idx);
    ++idx;
  }
  rep.projected_rank = static_cast<int>(image.rank());
  if (rep.projected_rank != rep.dimension)
    throw Error(ErrorKind::RankDeficit, "pi is not injective on the degree-" + std::to_string(degree) + " span: rank " +
                                            std::to_string(rep.projected_rank) + " < " + std::to_string(rep.dimension));

  rep.torus_collapsed = !ctx.fixed_lattice_basis().empty();
  auto slice = f_slice(rd, degree);
  rep.slice_dimension = static_cast<int>(slice.size());
  for (const auto& b : slice) {
    PBWMonomial m{Exps(U.num_roots(), 0), rd.zero(), b};
    auto vec = as_vec(PoissonElement::monomial(m));
    if (!(rep.torus_collapsed ? collapsed.contains(vec) : image.contains(vec)))
      throw Error(ErrorKind::RankDeficit, "F-monomial " + exps_to_string(b) + " is not in the image of pi");
  }
  if (!rep.torus_collapsed && rep.projected_rank != rep.slice_dimension)
    throw Error(ErrorKind::RankDeficit, "image of pi is larger than the degree slice");
  return rep;
}

ClosureReport invariant_closure(const SatakeContext& ctx, int degree) {
  const auto& G = ctx.gstar();
  const auto& rd = ctx.root_data();
  ClosureReport rep;
  auto gens = poisson_generators(ctx);

  // levels[m]: basis elements first reached at degree m.
  TrackedEchelon<CoordKey> span;
  std::vector<std::vector<CoordElement>> levels(degree + 1);
  int idx = 0;
  auto offer = [&](const CoordElement& x, int m) {
    if (x.is_zero()) return;
    if (!span.insert(as_vec(x), idx++)) levels[m].push_back(x);
  };
  offer(G.one(), 0);
  rep.dimensions.push_back(static_cast<int>(span.rank()));
  for (int m = 1; m <= degree; ++m) {
    for (const auto& x : levels[m - 1]) {
      for (const auto& [name, g] : gens) {
        offer(x * g, m);
        offer(G.bracket(g, x), m);
      }
    }
    rep.dimensions.push_back(static_cast<int>(span.rank()));
  }

  // Brackets and products of members must stay in the span of the right level.
  std::vector<TrackedEchelon<CoordKey>> upto(degree + 1);
  int tag = 0;
  for (int m = 0; m <= degree; ++m)
    for (int t = m; t <= degree; ++t)
      for (const auto& x : levels[m]) upto[t].insert(as_vec(x), tag++);
  for (int a = 0; a <= degree; ++a) {
    for (int b = a; a + b <= degree; ++b) {
      for (const auto& x : levels[a]) {
        for (const auto& y : levels[b]) {
          if (!upto[a + b].contains(as_vec(G.bracket(x, y))) || !upto[a + b].contains(as_vec(x * y)))
            throw Error(ErrorKind::ClosureEscape, "closure is not stable at degree " + std::to_string(a + b));
          ++rep.bracket_checks;
        }
      }
    }
  }

  // iota* is injective on the closure and hits the slice.
  TrackedEchelon<CoordKey> restricted, collapsed;
  std::vector<CoordElement> members;
  for (const auto& level : levels) members.insert(members.end(), level.begin(), level.end());
  idx = 0;
  for (const auto& x : members) {
    CoordElement y = ctx.iota_star(x);
    restricted.insert(as_vec(y), idx);
    collapsed.insert(as_vec(collapse_torus(y)), idx);
    ++idx;
  }
  rep.restricted_rank = static_cast<int>(restricted.rank());
  if (rep.restricted_rank != static_cast<int>(members.size()))
    throw Error(ErrorKind::RankDeficit, "iota* is not injective on the closure");
  rep.torus_collapsed = !ctx.fixed_lattice_basis().empty();
  auto slice = f_slice(rd, degree);
  rep.slice_dimension = static_cast<int>(slice.size());
  const int n = rd.num_roots();
  for (const auto& b : slice) {
    auto vec = as_vec(CoordElement::monomial({Exps(n, 0), rd.zero(), b}));
    if (!(rep.torus_collapsed ? collapsed.contains(vec) : restricted.contains(vec)))
      throw Error(ErrorKind::RankDeficit, "χ- monomial " + exps_to_string(b) + " is not reached by the closure");
  }
  if (!rep.torus_collapsed && rep.restricted_rank != rep.slice_dimension)
    throw Error(ErrorKind::RankDeficit, "closure is larger than the degree slice");

  // Compare with the specialized lattice of U^i.
  Lattice lat = i_lattice(ctx, degree);
  TrackedEchelon<CoordKey> lattice_span;
  idx = 0;
  for (const auto& x : lat.rows) lattice_span.insert(as_vec(phi(specialize(x))), idx++);
  bool inside = true;
  for (const auto& x : members)
    if (!lattice_span.contains(as_vec(x))) inside = false;
  rep.matches_lattice = inside && lattice_span.rank() == members.size();
  return rep;
}

}  // namespace qsp
