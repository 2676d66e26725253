#include "qsp/gstar.hpp"

#include <sstream>

#include "qsp/error.hpp"

namespace qsp {

CoordElement CoordElement::monomial(CoordKey key, const Rational& c) {
  CoordElement x;
  x.add(key, c);
  return x;
}

void CoordElement::add(const CoordKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoordElement& CoordElement::operator+=(const CoordElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

CoordElement& CoordElement::operator-=(const CoordElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

CoordElement CoordElement::operator-() const { return Rational(-1) * *this; }

CoordElement operator*(const Rational& c, const CoordElement& x) {
  if (c == 0) return {};
  CoordElement out = x;
  for (auto& [k, d] : out.terms_) d *= c;
  return out;
}

CoordElement operator*(const CoordElement& x, const CoordElement& y) {
  CoordElement out;
  for (const auto& [a, c] : x.terms_) {
    for (const auto& [b, d] : y.terms_) {
      CoordKey k = a;
      for (size_t t = 0; t < k.plus.size(); ++t) k.plus[t] += b.plus[t];
      for (size_t t = 0; t < k.alpha.size(); ++t) k.alpha[t] += b.alpha[t];
      for (size_t t = 0; t < k.minus.size(); ++t) k.minus[t] += b.minus[t];
      out.add(k, c * d);
    }
  }
  return out;
}

CoordElement phi(const PoissonElement& p) {
  CoordElement out;
  for (const auto& [m, c] : p.terms()) out.add({m.e, m.k, m.f}, c);
  return out;
}

PoissonElement phi_inverse(const CoordElement& a) {
  PoissonElement out;
  for (const auto& [k, c] : a.terms()) out.add({k.plus, k.alpha, k.minus}, c);
  return out;
}

GStar::GStar(const QuantumAlgebra& U) : U_(U), poisson_(U), n_(U.num_roots()), r_(U.root_data().rank()) {
  const int nv = num_variables();
  table_.assign(nv, std::vector<CoordElement>(nv));
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) {
      table_[a][b] = bracket_quantum(variable(a), variable(b));
      table_[b][a] = -table_[a][b];
    }
  }
}

CoordElement GStar::one() const { return constant(1); }

CoordElement GStar::constant(const Rational& c) const {
  return CoordElement::monomial({Exps(n_, 0), U_.root_data().zero(), Exps(n_, 0)}, c);
}

CoordElement GStar::chi_plus(int k) const {
  CoordKey key{Exps(n_, 0), U_.root_data().zero(), Exps(n_, 0)};
  key.plus[k] = 1;
  return CoordElement::monomial(key);
}

CoordElement GStar::chi_minus(int k) const {
  CoordKey key{Exps(n_, 0), U_.root_data().zero(), Exps(n_, 0)};
  key.minus[k] = 1;
  return CoordElement::monomial(key);
}

CoordElement GStar::alpha(const Weight& mu) const {
  return CoordElement::monomial({Exps(n_, 0), mu, Exps(n_, 0)});
}

CoordElement GStar::simple_plus(int j) const { return chi_plus(U_.root_data().simple_root_position(j)); }
CoordElement GStar::simple_minus(int j) const { return chi_minus(U_.root_data().simple_root_position(j)); }

CoordElement GStar::variable(int v) const {
  if (v < n_) return chi_plus(v);
  if (v < 2 * n_) return chi_minus(v - n_);
  return alpha(U_.root_data().simple(v - 2 * n_));
}

std::string GStar::variable_name(int v) const {
  if (v < n_) return "χ+_" + std::to_string(v + 1);
  if (v < 2 * n_) return "χ-_" + std::to_string(v - n_ + 1);
  return "a" + std::to_string(v - 2 * n_ + 1);
}

CoordElement GStar::bracket_quantum(const CoordElement& a, const CoordElement& b) const {
  return phi(poisson_.bracket(phi_inverse(a), phi_inverse(b)));
}

CoordElement GStar::derivative(const CoordElement& x, int v) const {
  CoordElement out;
  for (const auto& [key, c] : x.terms()) {
    CoordKey k = key;
    int* e;
    if (v < n_) e = &k.plus[v];
    else if (v < 2 * n_) e = &k.minus[v - n_];
    else e = &k.alpha[v - 2 * n_];
    if (*e == 0) continue;
    Rational f = c * *e;
    --*e;
    out.add(k, f);
  }
  return out;
}

CoordElement GStar::bracket(const CoordElement& a, const CoordElement& b) const {
  const int nv = num_variables();
  std::vector<CoordElement> da(nv), db(nv);
  for (int v = 0; v < nv; ++v) {
    da[v] = derivative(a, v);
    db[v] = derivative(b, v);
  }
  CoordElement out;
  for (int x = 0; x < nv; ++x) {
    if (da[x].is_zero()) continue;
    for (int y = 0; y < nv; ++y) {
      if (db[y].is_zero() || table_[x][y].is_zero()) continue;
      out += da[x] * db[y] * table_[x][y];
    }
  }
  return out;
}

CoordElement GStar::substitute(const CoordElement& x, const std::vector<CoordElement>& plus,
                               const std::vector<CoordElement>& minus, const CoordElement& one) {
  CoordElement out;
  for (const auto& [key, c] : x.terms()) {
    CoordKey base = one.terms().begin()->first;
    base.alpha = key.alpha;
    CoordElement t = CoordElement::monomial(base, c);
    for (size_t k = 0; k < key.plus.size(); ++k)
      for (int e = 0; e < key.plus[k]; ++e) t = t * plus[k];
    for (size_t k = 0; k < key.minus.size(); ++k)
      for (int e = 0; e < key.minus[k]; ++e) t = t * minus[k];
    out += t;
  }
  return out;
}

Grade grade(const RootData& rd, const CoordElement& a) {
  Grade g;
  g.degree = rd.zero();
  if (a.is_zero()) {
    g.zero = true;
    return g;
  }
  bool first = true;
  for (const auto& [key, c] : a.terms()) {
    Weight d = rd.weight_of(key.minus);
    Weight p = rd.weight_of(key.plus);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= p[i];
    if (first) {
      g.degree = d;
      first = false;
    } else if (d != g.degree) {
      g.homogeneous = false;
    }
  }
  return g;
}

std::pair<std::vector<CoordElement>, std::vector<CoordElement>> coordinate_change(const QuantumAlgebra& U1,
                                                                                   const QuantumAlgebra& U2) {
  if (U1.root_data().label() != U2.root_data().label())
    throw Error(ErrorKind::InvalidArgument, "coordinate change needs two words of the same type");
  std::vector<CoordElement> plus, minus;
  for (int k = 0; k < U1.num_roots(); ++k) {
    AlgebraElement x, y;
    for (const auto& [w, c] : U1.root_word(k)) {
      AlgebraElement t = U2.scalar(c);
      for (int l : w) t = U2.multiply(t, U2.e(l));
      x += t;
    }
    for (const auto& [w, c] : U1.root_word_f(k)) {
      AlgebraElement t = U2.scalar(c);
      for (int l : w) t = U2.multiply(t, U2.f(l));
      y += t;
    }
    plus.push_back(phi(specialize(x)));
    minus.push_back(phi(specialize(y)));
  }
  return {plus, minus};
}

bool reduced_word_consistency(const QuantumAlgebra& U1, const QuantumAlgebra& U2, std::string* report) {
  GStar g1(U1), g2(U2);
  auto [plus, minus] = coordinate_change(U1, U2);
  const int r = U1.root_data().rank();
  std::vector<std::pair<CoordElement, CoordElement>> gens;
  std::vector<std::string> names;
  for (int j = 0; j < r; ++j) {
    gens.emplace_back(g1.simple_plus(j), g2.simple_plus(j));
    gens.emplace_back(g1.simple_minus(j), g2.simple_minus(j));
    gens.emplace_back(g1.alpha(U1.root_data().simple(j)), g2.alpha(U2.root_data().simple(j)));
    names.push_back("χ+" + std::to_string(j + 1));
    names.push_back("χ-" + std::to_string(j + 1));
    names.push_back("a" + std::to_string(j + 1));
  }
  bool ok = true;
  std::ostringstream out;
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = a + 1; b < gens.size(); ++b) {
      CoordElement lhs = GStar::substitute(g1.bracket(gens[a].first, gens[b].first), plus, minus, g2.one());
      CoordElement rhs = g2.bracket(gens[a].second, gens[b].second);
      if (lhs != rhs) {
        ok = false;
        out << "{" << names[a] << ", " << names[b] << "}: " << to_string(lhs) << " vs " << to_string(rhs) << "\n";
      }
    }
  }
  if (report) *report = out.str();
  return ok;
}

namespace {

void append_power(std::string& s, const std::string& name, int e) {
  if (e == 0) return;
  if (!s.empty()) s += "*";
  s += name;
  if (e != 1) s += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const CoordElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : a.terms()) {
    std::string vars;
    for (size_t k = 0; k < key.plus.size(); ++k) append_power(vars, "χ+_" + std::to_string(k + 1), key.plus[k]);
    for (size_t i = 0; i < key.alpha.size(); ++i) append_power(vars, "a" + std::to_string(i + 1), key.alpha[i]);
    for (size_t k = 0; k < key.minus.size(); ++k) append_power(vars, "χ-_" + std::to_string(k + 1), key.minus[k]);
    Rational mag = abs(c);
    std::string term;
    if (vars.empty()) term = to_string(mag);
    else if (mag == 1) term = vars;
    else term = to_string(mag) + "*" + vars;
    if (first) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::complex<double> evaluate(const CoordElement& a, const std::vector<std::complex<double>>& plus,
                              const std::vector<std::complex<double>>& alpha,
                              const std::vector<std::complex<double>>& minus) {
  std::complex<double> total = 0;
  for (const auto& [key, c] : a.terms()) {
    std::complex<double> t = c.get_d();
    for (size_t k = 0; k < key.plus.size(); ++k) t *= std::pow(plus[k], key.plus[k]);
    for (size_t i = 0; i < key.alpha.size(); ++i) t *= std::pow(alpha[i], key.alpha[i]);
    for (size_t k = 0; k < key.minus.size(); ++k) t *= std::pow(minus[k], key.minus[k]);
    total += t;
  }
  return total;
}

}  // namespace qsp
