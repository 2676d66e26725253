#include "qsp/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {

// ---------------------------------------------------------------- SPoly

SPoly SPoly::variable(int m, int a) {
  SPoly p;
  std::vector<int> e(m, 0);
  e[a] = 1;
  p.terms_[e] = 1;
  return p;
}

SPoly SPoly::constant(int m, const Rational& c) {
  SPoly p;
  p.add(std::vector<int>(m, 0), c);
  return p;
}

void SPoly::add(const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SPoly& SPoly::operator+=(const SPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
      out.add(e, ca * cb);
    }
  return out;
}

SPoly operator*(const Rational& c, const SPoly& a) {
  SPoly out;
  for (const auto& [e, x] : a.terms_) out.add(e, c * x);
  return out;
}

SPoly SPoly::derivative(int a) const {
  SPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[a] == 0) continue;
    std::vector<int> d = e;
    --d[a];
    out.add(d, c * e[a]);
  }
  return out;
}

// ---------------------------------------------------------------- symbolic side

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix identity(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  IntMatrix out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  IntMatrix out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[j][i];
  return out;
}

SymMatrix sym_identity(const GStar& G, int n) {
  SymMatrix m(n, std::vector<CoordElement>(n));
  for (int i = 0; i < n; ++i) m[i][i] = G.one();
  return m;
}

SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b) {
  const int n = static_cast<int>(a.size());
  SymMatrix out(n, std::vector<CoordElement>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!a[i][k].is_zero())
        for (int j = 0; j < n; ++j)
          if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// I + x * m for a signed matrix unit m.
SymMatrix one_parameter(const GStar& G, const IntMatrix& m, const CoordElement& x) {
  const int n = static_cast<int>(m.size());
  SymMatrix out = sym_identity(G, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != 0) out[i][j] += Rational(m[i][j]) * x;
  return out;
}

IntMatrix unit(int n, int i, int j) {
  IntMatrix m(n, std::vector<int>(n, 0));
  m[i][j] = 1;
  return m;
}

SparseVec<CoordKey, Rational> as_vec(const CoordElement& p) { return {p.terms().begin(), p.terms().end()}; }

// Exponent vectors of total degree <= d in m variables, graded-lex increasing.
std::vector<std::vector<int>> monomials_upto(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == m) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[k] = a;
      rec(k + 1, left - a);
    }
    cur[k] = 0;
  };
  rec(0, d);
  return out;
}

bool grlex_less(const std::vector<int>& x, const std::vector<int>& y) {
  int dx = 0, dy = 0;
  for (int c : x) dx += c;
  for (int c : y) dy += c;
  if (dx != dy) return dx < dy;
  return x < y;
}

}  // namespace

StokesContext::StokesContext(int n, const std::vector<int>& word, bool allow_extended) : n_(n) {
  const int max_n = allow_extended ? 4 : 3;
  if (n < 2 || n > max_n)
    throw Error(ErrorKind::ConfigError, "n = " + std::to_string(n) + " is outside the supported scope (2.." +
                                            std::to_string(max_n) + (allow_extended ? ")" : "; n = 4 needs the extended scope)"));
  static const char* labels[] = {"", "", "A1", "A2", "A3"};
  U_ = std::make_unique<QuantumAlgebra>(cartan_input(labels[n], word), allow_extended);
  G_ = std::make_unique<GStar>(*U_);
  word_ = U_->root_data().word();
  const GStar& G = *G_;
  const int N = U_->num_roots();

  u_plus_ = sym_identity(G, n);
  u_minus_ = sym_identity(G, n);
  IntMatrix w = identity(n);
  for (int k = 0; k < N; ++k) {
    const int i = word_[k];
    IntMatrix e = mul(mul(w, unit(n, i, i + 1)), transpose(w));
    IntMatrix f = mul(mul(w, unit(n, i + 1, i)), transpose(w));
    u_plus_ = sym_mul(one_parameter(G, e, G.chi_plus(k)), u_plus_);
    u_minus_ = sym_mul(u_minus_, one_parameter(G, f, G.chi_minus(k)));
    w = mul(w, sdot(i));
  }

  // S = transpose(u-) Ad_{t^-1}(u+), (t^-1 u+ t)_ij = u+_ij / (alpha_i ... alpha_{j-1}).
  SymMatrix ad = u_plus_;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight mu(n - 1, 0);
      for (int t = i; t < j; ++t) mu[t] = -1;
      ad[i][j] = ad[i][j] * G.alpha(mu);
    }
  SymMatrix ut(n, std::vector<CoordElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ut[i][j] = u_minus_[j][i];
  s_ = sym_mul(ut, ad);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

std::vector<std::vector<int>> StokesContext::sdot(int i) const {
  IntMatrix m = identity(n_);
  m[i][i] = 0;
  m[i + 1][i + 1] = 0;
  m[i][i + 1] = -1;
  m[i + 1][i] = 1;
  return m;
}

int StokesContext::entry_index(int i, int j) const {
  auto it = std::find(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
  if (it == pairs_.end()) throw Error(ErrorKind::InvalidArgument, "no Stokes entry s" + std::to_string(i + 1) + std::to_string(j + 1));
  return static_cast<int>(it - pairs_.begin());
}

std::string StokesContext::entry_name(int a) const {
  return "s" + std::to_string(pairs_[a].first + 1) + std::to_string(pairs_[a].second + 1);
}

const CoordElement& StokesContext::s_monomial(const std::vector<int>& e) const {
  auto it = monomials_.find(e);
  if (it != monomials_.end()) return it->second;
  CoordElement x = G_->one();
  for (int a = 0; a < num_entries(); ++a)
    for (int p = 0; p < e[a]; ++p) x = x * entry(a);
  return monomials_.emplace(e, std::move(x)).first->second;
}

CoordElement StokesContext::expand(const SPoly& p) const {
  CoordElement out;
  for (const auto& [e, c] : p.terms()) out += c * s_monomial(e);
  return out;
}

SPoly StokesContext::du_bracket(int a, int b) const {
  if (auto it = table_.find({a, b}); it != table_.end()) return it->second;
  CoordElement target = G_->bracket(entry(a), entry(b));
  int degree = 0;
  for (const auto& [key, c] : target.terms()) {
    int d = 0;
    for (int x : key.plus) d += x;
    for (int x : key.minus) d += x;
    degree = std::max(degree, d);
  }
  auto& ech = ansatz_[degree];
  auto& keys = ansatz_keys_[degree];
  if (!ech) {
    ech = std::make_unique<TrackedEchelon<CoordKey>>();
    keys = monomials_upto(num_entries(), degree);
    for (size_t t = 0; t < keys.size(); ++t)
      if (ech->insert(as_vec(s_monomial(keys[t])), static_cast<int>(t)))
        throw Error(ErrorKind::RewriteFailure, "Stokes entries are not algebraically independent");
  }
  auto combo = ech->solve(as_vec(target));
  if (!combo)
    throw Error(ErrorKind::RewriteFailure,
                "{" + entry_name(a) + ", " + entry_name(b) + "} is not a polynomial in the Stokes entries");
  SPoly out;
  for (const auto& [t, c] : *combo) out.add(keys[t], c);
  table_.emplace(std::make_pair(a, b), out);
  return out;
}

SPoly StokesContext::bracket(const SPoly& x, const SPoly& y) const {
  SPoly out;
  const int m = num_entries();
  for (int a = 0; a < m; ++a) {
    SPoly dx = x.derivative(a);
    if (dx.is_zero()) continue;
    for (int b = 0; b < m; ++b) {
      SPoly dy = y.derivative(b);
      if (dy.is_zero()) continue;
      out += dx * dy * du_bracket(a, b);
    }
  }
  return out;
}

std::string StokesContext::to_string(const SPoly& p) const {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::vector<int>, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string vars;
    for (int a = 0; a < num_entries(); ++a) {
      if (e[a] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += entry_name(a);
      if (e[a] != 1) vars += "^" + std::to_string(e[a]);
    }
    Rational mag = abs(c);
    std::string term;
    if (vars.empty()) term = qsp::to_string(mag);
    else if (mag == 1) term = vars;
    else term = qsp::to_string(mag) + "*" + vars;
    if (first) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::vector<BracketEntry> bracket_table(const StokesContext& ctx) {
  std::vector<BracketEntry> out;
  for (int a = 0; a < ctx.num_entries(); ++a)
    for (int b = a; b < ctx.num_entries(); ++b) out.push_back({a, b, ctx.du_bracket(a, b)});
  return out;
}

int check_bracket_axioms(const StokesContext& ctx) {
  const int m = ctx.num_entries();
  int checked = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!(ctx.du_bracket(a, b) + ctx.du_bracket(b, a)).is_zero())
        throw Error(ErrorKind::RewriteFailure,
                    "{" + ctx.entry_name(a) + ", " + ctx.entry_name(b) + "} is not skew-symmetric");
      ++checked;
    }
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = b; c < m; ++c) {
        SPoly x = SPoly::variable(m, a), y = SPoly::variable(m, b), z = SPoly::variable(m, c);
        SPoly sum = ctx.bracket(x, ctx.bracket(y, z)) + ctx.bracket(y, ctx.bracket(z, x)) +
                    ctx.bracket(z, ctx.bracket(x, y));
        if (!sum.is_zero())
          throw Error(ErrorKind::RewriteFailure, "Jacobi fails on " + ctx.entry_name(a) + ", " + ctx.entry_name(b) +
                                                     ", " + ctx.entry_name(c) + ": " + ctx.to_string(sum));
        ++checked;
      }
  return checked;
}

// ---------------------------------------------------------------- numeric side

namespace {

CMatrix to_complex(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m[i][j];
  return out;
}

cplx random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  return {d(rng), d(rng)};
}

// Away from zero, so that alpha_i^-1 stays moderate.
cplx random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2.0), arg(-M_PI, M_PI);
  return std::polar(mod(rng), arg(rng));
}

CMatrix theta(const CMatrix& g) { return g.transpose().inverse(); }

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// t with t_i / t_{i+1} = alpha_i and det t = 1.
Eigen::VectorXcd torus(const std::vector<cplx>& alpha) {
  const int n = static_cast<int>(alpha.size()) + 1;
  Eigen::VectorXcd t(n);
  t(n - 1) = 1;
  for (int i = n - 2; i >= 0; --i) t(i) = alpha[i] * t(i + 1);
  cplx det = t.prod();
  cplx scale = std::pow(det, -1.0 / n);
  return t * scale;
}

}  // namespace

NumericGroupPoint operator*(const NumericGroupPoint& x, const NumericGroupPoint& y) {
  return {x.plus * y.plus, x.minus * y.minus};
}

NumericGroupPoint random_group_point(int n, std::mt19937_64& rng) {
  CMatrix up = CMatrix::Identity(n, n), lo = CMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      up(i, j) = random_complex(rng);
      lo(j, i) = random_complex(rng);
    }
  std::vector<cplx> alpha(n - 1);
  for (auto& a : alpha) a = random_unit(rng);
  Eigen::VectorXcd t = torus(alpha);
  return {up * t.asDiagonal(), t.cwiseInverse().asDiagonal() * lo};
}

NumericGroupPoint random_k_perp(int n, std::mt19937_64& rng) {
  CMatrix lo = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    lo(i, i) = random_unit(rng);
    for (int j = 0; j < i; ++j) lo(i, j) = random_complex(rng);
  }
  return {theta(lo), lo};
}

NumericCoords numeric_coordinates(const StokesContext& ctx, const NumericGroupPoint& g) {
  const int n = ctx.n();
  const auto& word = ctx.word();
  NumericCoords c;
  Eigen::VectorXcd t = g.plus.diagonal();
  for (int i = 0; i < n; ++i)
    if (std::abs(t(i)) < 1e-12) throw Error(ErrorKind::SingularPoint, "torus part is singular");
  for (int i = 0; i + 1 < n; ++i) c.alpha.push_back(t(i) / t(i + 1));

  // u+ = x_N ... x_1: read a_1 off the simple-root entry, strip x_1, conjugate.
  CMatrix u = g.plus * t.cwiseInverse().asDiagonal();
  for (int i : word) {
    cplx a = u(i, i + 1);
    c.plus.push_back(a);
    CMatrix strip = CMatrix::Identity(n, n);
    strip(i, i + 1) = -a;
    CMatrix s = to_complex(ctx.sdot(i));
    u = s.transpose() * u * strip * s;
  }
  // u- = y_1 ... y_N: strip y_1 on the left.
  CMatrix l = t.asDiagonal() * g.minus;
  for (int i : word) {
    cplx b = l(i + 1, i);
    c.minus.push_back(b);
    CMatrix strip = CMatrix::Identity(n, n);
    strip(i + 1, i) = -b;
    CMatrix s = to_complex(ctx.sdot(i));
    l = s.transpose() * strip * l * s;
  }
  return c;
}

NumericGroupPoint from_coordinates(const StokesContext& ctx, const NumericCoords& c) {
  const int n = ctx.n();
  const auto& word = ctx.word();
  CMatrix up = CMatrix::Identity(n, n), lo = CMatrix::Identity(n, n), w = CMatrix::Identity(n, n);
  for (size_t k = 0; k < word.size(); ++k) {
    const int i = word[k];
    CMatrix e = CMatrix::Zero(n, n), f = CMatrix::Zero(n, n);
    e(i, i + 1) = 1;
    f(i + 1, i) = 1;
    up = (CMatrix::Identity(n, n) + c.plus[k] * w * e * w.transpose()) * up;
    lo = lo * (CMatrix::Identity(n, n) + c.minus[k] * w * f * w.transpose());
    w = w * to_complex(ctx.sdot(i));
  }
  Eigen::VectorXcd t = torus(c.alpha);
  return {up * t.asDiagonal(), t.cwiseInverse().asDiagonal() * lo};
}

cplx evaluate(const CoordElement& f, const NumericCoords& c) { return evaluate(f, c.plus, c.alpha, c.minus); }

Factorization numeric_factorize(const StokesContext& ctx, const NumericGroupPoint& g) {
  const int n = ctx.n();
  if (g.plus.rows() != n || g.plus.cols() != n || g.minus.rows() != n || g.minus.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "group point has the wrong size");
  if (!g.plus.allFinite() || !g.minus.allFinite()) throw Error(ErrorKind::SingularPoint, "non-finite entries");
  const double scale = std::max(1.0, std::max(max_abs(g.plus), max_abs(g.minus)));
  for (int i = 0; i < n; ++i) {
    if (std::abs(g.plus(i, i)) < 1e-12 * scale || std::abs(g.minus(i, i)) < 1e-12 * scale)
      throw Error(ErrorKind::SingularPoint, "diagonal entry vanishes");
    if (std::abs(g.plus(i, i) * g.minus(i, i) - 1.0) > 1e-8)
      throw Error(ErrorKind::InvalidArgument, "diag(b+) diag(b-) != 1");
    for (int j = 0; j < i; ++j)
      if (std::abs(g.plus(i, j)) > 1e-12 * scale || std::abs(g.minus(j, i)) > 1e-12 * scale)
        throw Error(ErrorKind::InvalidArgument, "group point is not a pair of opposite triangular matrices");
  }

  // k = (b+, theta(b+)) absorbs the whole b+ part, so p = (1, transpose(b+) b-).
  Factorization out;
  out.k = {g.plus, theta(g.plus)};
  out.p = {CMatrix::Identity(n, n), g.plus.transpose() * g.minus};
  NumericGroupPoint kp = out.k * out.p;
  out.residual = std::max({max_abs(kp.plus - g.plus), max_abs(kp.minus - g.minus),
                           max_abs(out.k.plus - theta(out.k.minus))});

  // Closed form Ad_t(transpose(u+)) u- from the coordinates of g.
  NumericCoords c = numeric_coordinates(ctx, g);
  NumericCoords split = c;
  std::fill(split.alpha.begin(), split.alpha.end(), cplx(1));
  NumericGroupPoint unip = from_coordinates(ctx, split);
  Eigen::VectorXcd t = g.plus.diagonal();
  CMatrix closed = t.asDiagonal() * unip.plus.transpose() * t.cwiseInverse().asDiagonal() * unip.minus;
  out.closed_form_error = max_abs(closed - out.p.minus);
  if (!std::isfinite(out.residual) || !std::isfinite(out.closed_form_error))
    throw Error(ErrorKind::SingularPoint, "factorization is not finite");
  return out;
}

SampleReport invariance_sample_check(const StokesContext& ctx, const CoordElement& f, int samples,
                                     std::uint64_t seed) {
  SampleReport rep{samples, seed, 0};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    NumericGroupPoint g = random_group_point(ctx.n(), rng);
    NumericGroupPoint k = random_k_perp(ctx.n(), rng);
    cplx before = evaluate(f, numeric_coordinates(ctx, g));
    cplx after = evaluate(f, numeric_coordinates(ctx, k * g));
    rep.max_deviation = std::max(rep.max_deviation, std::abs(after - before));
  }
  return rep;
}

SampleReport pullback_sample_check(const StokesContext& ctx, int samples, std::uint64_t seed) {
  SampleReport rep{samples, seed, 0};
  std::mt19937_64 rng(seed);
  const auto& G = ctx.gstar();
  const auto& rd = ctx.algebra().root_data();
  std::vector<std::pair<int, CoordElement>> simple;
  for (int i = 0; i < rd.rank(); ++i) {
    const int k = rd.simple_root_position(i);
    Weight mu = rd.zero();
    mu[i] = -1;
    simple.emplace_back(k, G.chi_minus(k) + G.chi_plus(k) * G.alpha(mu));
  }
  for (int s = 0; s < samples; ++s) {
    NumericGroupPoint g = random_group_point(ctx.n(), rng);
    NumericCoords c = numeric_coordinates(ctx, g);
    Factorization fac = numeric_factorize(ctx, g);
    NumericCoords pc = numeric_coordinates(ctx, fac.p);
    for (int a = 0; a < ctx.num_entries(); ++a) {
      auto [i, j] = ctx.entry_pair(a);
      rep.max_deviation = std::max(rep.max_deviation, std::abs(evaluate(ctx.entry(a), c) - fac.p.minus(j, i)));
    }
    for (const auto& [k, expr] : simple)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(evaluate(expr, c) - pc.minus[k]));
  }
  return rep;
}

SampleReport factorization_sample_check(const StokesContext& ctx, int samples, std::uint64_t seed) {
  SampleReport rep{samples, seed, 0};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Factorization fac = numeric_factorize(ctx, random_group_point(ctx.n(), rng));
    rep.max_deviation = std::max({rep.max_deviation, fac.residual, fac.closed_form_error});
  }
  return rep;
}

}  // namespace qsp
