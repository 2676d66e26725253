#include "qsp/qalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "qsp/error.hpp"

namespace qsp {

namespace {

int last_nonzero(const Exps& a) {
  for (int k = static_cast<int>(a.size()); k-- > 0;)
    if (a[k] != 0) return k;
  return -1;
}

int first_nonzero(const Exps& a) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) return static_cast<int>(k);
  return -1;
}

Weight add(const Weight& a, const Weight& b) {
  Weight out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Fraction qp(int n) { return Fraction(q_pow(n)); }

template <class Map>
void accumulate(Map& out, const typename Map::key_type& key, const Fraction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Exponent vectors a >= 0 with sum a_k beta_k == w.
void exps_of_weight(const RootData& rd, const Weight& w, size_t k, Exps& cur, std::vector<Exps>& out) {
  if (k == cur.size()) {
    if (std::all_of(w.begin(), w.end(), [](int c) { return c == 0; })) out.push_back(cur);
    return;
  }
  Weight rest = w;
  for (int a = 0;; ++a) {
    cur[k] = a;
    exps_of_weight(rd, rest, k + 1, cur, out);
    bool fits = true;
    for (int i = 0; i < rd.rank(); ++i) {
      rest[i] -= rd.root(static_cast<int>(k))[i];
      if (rest[i] < 0) fits = false;
    }
    if (!fits) break;
  }
  cur[k] = 0;
}

}  // namespace

int PBWMonomial::degree() const {
  int d = 0;
  for (int a : e) d += a;
  for (int b : f) d += b;
  return d;
}

AlgebraElement::AlgebraElement(Terms terms) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

AlgebraElement AlgebraElement::monomial(PBWMonomial m, const Fraction& c) {
  AlgebraElement x;
  x.add(m, c);
  return x;
}

void AlgebraElement::add(const PBWMonomial& m, const Fraction& c) { accumulate(terms_, m, c); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement operator*(const Fraction& c, const AlgebraElement& x) {
  if (c.is_zero()) return {};
  AlgebraElement out = x;
  for (auto& [m, d] : out.terms_) d *= c;
  return out;
}

QuantumAlgebra::QuantumAlgebra(const CartanInput& input, bool allow_extended)
    : rd_(input, allow_extended), words_(rd_), n_(rd_.num_roots()) {
  build_root_vectors();
  build_tables();
  build_braid_images();
}

void QuantumAlgebra::build_root_vectors() {
  const auto& w = rd_.word();
  for (int k = 0; k < n_; ++k) {
    WordElem x = words_.generator({Gen::Kind::E, w[k], {}});
    WordElem y = words_.generator({Gen::Kind::F, w[k], {}});
    for (int j = k; j-- > 0;) {
      x = words_.braid(w[j], x);
      y = words_.braid(w[j], y);
    }
    WordVec xe, yf;
    for (const auto& [key, c] : x) {
      if (!key.f.empty() || key.k != rd_.zero())
        throw Error(ErrorKind::ConfluenceFailure, "root vector X_" + std::to_string(k + 1) + " is not in U+");
      xe.emplace(key.e, c);
    }
    for (const auto& [key, c] : y) {
      if (!key.e.empty() || key.k != rd_.zero())
        throw Error(ErrorKind::ConfluenceFailure, "root vector Y_" + std::to_string(k + 1) + " is not in U-");
      yf.emplace(key.f, c);
    }
    e_words_.push_back(std::move(xe));
    f_words_.push_back(std::move(yf));
  }
}

WordVec QuantumAlgebra::word_product(const WordVec& a, const WordVec& b) const {
  WordVec raw;
  for (const auto& [u, c] : a) {
    for (const auto& [w, d] : b) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      accumulate(raw, uw, c * d);
    }
  }
  return words_.reduce(raw);
}

WordVec QuantumAlgebra::monomial_words(Side side, const Exps& a) {
  const auto& gens = side == Side::E ? e_words_ : f_words_;
  WordVec out{{Word{}, Fraction(1)}};
  for (int k = 0; k < n_; ++k)
    for (int t = 0; t < a[k]; ++t) out = word_product(out, gens[k]);
  return out;
}

// Coordinates of a combination of words in the PBW basis. The echelon for a
// weight holds word(m) + tag(m) for every monomial m of that weight; tags sort
// below words, so reducing v leaves -sum coord_m tag(m).
QuantumAlgebra::MonoVec QuantumAlgebra::to_pbw(Side side, const WordVec& v) {
  auto& bases = side == Side::E ? e_basis_ : f_basis_;
  std::map<Weight, SparseVec<std::pair<int, Word>, Fraction>> parts;
  for (const auto& [w, c] : v) parts[words_.weight_of(w)].emplace(std::make_pair(1, w), c);

  MonoVec out;
  for (auto& [wt, part] : parts) {
    auto it = bases.find(wt);
    if (it == bases.end()) {
      Echelon<std::pair<int, Word>, Fraction> ech;
      std::vector<Exps> monos;
      Exps cur(n_, 0);
      exps_of_weight(rd_, wt, 0, cur, monos);
      for (const Exps& m : monos) {
        SparseVec<std::pair<int, Word>, Fraction> row;
        for (const auto& [w, c] : monomial_words(side, m)) row.emplace(std::make_pair(1, w), c);
        row.emplace(std::make_pair(0, Word(m.begin(), m.end())), Fraction(1));
        if (!ech.insert(row)) throw Error(ErrorKind::ConfluenceFailure, "PBW monomials are dependent");
      }
      it = bases.emplace(wt, std::move(ech)).first;
    }
    for (const auto& [key, c] : it->second.reduce(std::move(part))) {
      if (key.first != 0) throw Error(ErrorKind::ConfluenceFailure, "element outside the PBW span");
      accumulate(out, Exps(key.second.begin(), key.second.end()), -c);
    }
  }
  return out;
}

AlgebraElement QuantumAlgebra::split_pbw(const WordElem& x) {
  std::map<std::pair<Weight, Word>, WordVec> by_kf;
  for (const auto& [key, c] : x) by_kf[{key.k, key.f}].emplace(key.e, c);
  std::map<std::pair<Exps, Weight>, WordVec> by_ek;
  for (const auto& [kf, vec] : by_kf) {
    for (const auto& [a, c] : to_pbw(Side::E, vec)) accumulate(by_ek[{a, kf.first}], kf.second, c);
  }
  AlgebraElement out;
  for (const auto& [ek, vec] : by_ek) {
    for (const auto& [b, c] : to_pbw(Side::F, vec)) out.add({ek.first, ek.second, b}, c);
  }
  return out;
}

void QuantumAlgebra::build_tables() {
  e_rules_.assign(n_, std::vector<MonoVec>(n_));
  f_rules_.assign(n_, std::vector<MonoVec>(n_));
  for (int l = 0; l < n_; ++l) {
    for (int k = 0; k < l; ++k) {
      MonoVec e = to_pbw(Side::E, word_product(e_words_[l], e_words_[k]));
      MonoVec f = to_pbw(Side::F, word_product(f_words_[l], f_words_[k]));
      AlgebraElement ex, fx;
      for (const auto& [a, c] : e) ex.add({a, rd_.zero(), Exps(n_, 0)}, c);
      for (const auto& [b, c] : f) fx.add({Exps(n_, 0), rd_.zero(), b}, c);
      e_table_.emplace(std::make_pair(l, k), std::move(ex));
      f_table_.emplace(std::make_pair(l, k), std::move(fx));
      e_rules_[l][k] = std::move(e);
      f_rules_[l][k] = std::move(f);
    }
  }
  for (int m = 0; m < n_; ++m) {
    for (int l = 0; l < n_; ++l) {
      WordElem y, x;
      for (const auto& [w, c] : f_words_[m]) y[{{}, rd_.zero(), w}] = c;
      for (const auto& [w, c] : e_words_[l]) x[{w, rd_.zero(), {}}] = c;
      cross_table_.emplace(std::make_pair(m, l), split_pbw(words_.multiply(y, x)));
    }
  }
}

void QuantumAlgebra::build_braid_images() {
  const int r = rd_.rank();
  for (int inv = 0; inv < 2; ++inv) {
    braid_e_[inv].assign(r, {});
    braid_f_[inv].assign(r, {});
    for (int i = 0; i < r; ++i) {
      std::vector<AlgebraElement> te(r), tf(r);
      for (int j = 0; j < r; ++j) {
        te[j] = from_products(braid_image(rd_, i, {Gen::Kind::E, j, {}}, inv == 1));
        tf[j] = from_products(braid_image(rd_, i, {Gen::Kind::F, j, {}}, inv == 1));
      }
      for (int k = 0; k < n_; ++k) {
        AlgebraElement xe, yf;
        for (const auto& [w, c] : e_words_[k]) {
          AlgebraElement t = scalar(c);
          for (int l : w) t = multiply(t, te[l]);
          xe += t;
        }
        for (const auto& [w, c] : f_words_[k]) {
          AlgebraElement t = scalar(c);
          for (int l : w) t = multiply(t, tf[l]);
          yf += t;
        }
        braid_e_[inv][i].push_back(std::move(xe));
        braid_f_[inv][i].push_back(std::move(yf));
      }
    }
  }
}

PBWMonomial QuantumAlgebra::unit_monomial() const { return {Exps(n_, 0), rd_.zero(), Exps(n_, 0)}; }

AlgebraElement QuantumAlgebra::one() const { return AlgebraElement::monomial(unit_monomial()); }

AlgebraElement QuantumAlgebra::scalar(const Fraction& c) const {
  return AlgebraElement::monomial(unit_monomial(), c);
}

AlgebraElement QuantumAlgebra::root_e(int k) const {
  PBWMonomial m = unit_monomial();
  m.e[k] = 1;
  return AlgebraElement::monomial(m);
}

AlgebraElement QuantumAlgebra::root_f(int k) const {
  PBWMonomial m = unit_monomial();
  m.f[k] = 1;
  return AlgebraElement::monomial(m);
}

AlgebraElement QuantumAlgebra::e(int i) const { return root_e(rd_.simple_root_position(i)); }
AlgebraElement QuantumAlgebra::f(int i) const { return root_f(rd_.simple_root_position(i)); }

AlgebraElement QuantumAlgebra::k(const Weight& mu) const {
  PBWMonomial m = unit_monomial();
  m.k = mu;
  return AlgebraElement::monomial(m);
}

AlgebraElement QuantumAlgebra::from_products(const std::vector<GenProduct>& sum) const {
  AlgebraElement out;
  for (const auto& p : sum) {
    AlgebraElement t = scalar(p.coeff);
    for (const auto& g : p.letters) {
      switch (g.kind) {
        case Gen::Kind::E: t = multiply(t, e(g.index)); break;
        case Gen::Kind::F: t = multiply(t, f(g.index)); break;
        case Gen::Kind::K: t = multiply(t, k(g.weight)); break;
      }
    }
    out += t;
  }
  return out;
}

Weight QuantumAlgebra::weight(const PBWMonomial& m) const {
  Weight w = rd_.weight_of(m.e);
  Weight wf = rd_.weight_of(m.f);
  for (size_t i = 0; i < w.size(); ++i) w[i] -= wf[i];
  return w;
}

// a * X_k (or b * Y_k) in normal order.
QuantumAlgebra::MonoVec QuantumAlgebra::mul_letter(Side side, const Exps& a, int k) const {
  const int last = last_nonzero(a);
  if (last <= k) {
    Exps b = a;
    ++b[k];
    return {{b, Fraction(1)}};
  }
  auto& cache = side == Side::E ? e_cache_ : f_cache_;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache.find({a, k});
    if (it != cache.end()) return it->second;
  }
  const auto& rule = (side == Side::E ? e_rules_ : f_rules_)[last][k];
  Exps a1 = a;
  --a1[last];
  MonoVec out;
  for (const auto& [m, c] : rule) {
    for (const auto& [b, d] : mul_mono(side, a1, m)) accumulate(out, b, c * d);
  }
  std::lock_guard lock(cache_mutex_);
  cache.emplace(std::make_pair(a, k), out);
  return out;
}

QuantumAlgebra::MonoVec QuantumAlgebra::mul_mono(Side side, const Exps& a, const Exps& b) const {
  MonoVec cur{{a, Fraction(1)}};
  for (int k = 0; k < n_; ++k) {
    for (int t = 0; t < b[k]; ++t) {
      MonoVec next;
      for (const auto& [x, c] : cur)
        for (const auto& [y, d] : mul_letter(side, x, k)) accumulate(next, y, c * d);
      cur = std::move(next);
    }
  }
  return cur;
}

// f * e for an F-monomial f and an E-monomial e, as E K F terms. Peels the
// last letter Y_m of f and the first letter X_l of e and uses the cross table;
// the recursion decreases the total height.
AlgebraElement QuantumAlgebra::cross(const Exps& f, const Exps& e) const {
  const int m = last_nonzero(f);
  const int l = first_nonzero(e);
  if (m < 0 || l < 0) return AlgebraElement::monomial({e, rd_.zero(), f});
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cross_cache_.find({f, e});
    if (it != cross_cache_.end()) return it->second;
  }
  Exps f1 = f, e1 = e;
  --f1[m];
  --e1[l];
  AlgebraElement out;
  for (const auto& [t, c] : cross_table_.at({m, l}).terms()) {
    // f1 * (A K_nu B) * e1
    const AlgebraElement right = cross(t.f, e1);
    for (const auto& [t2, c2] : right.terms()) {
      // A K_nu (A2 K_nu2 B2) = q^{(nu, wt A2)} (A A2) K_{nu+nu2} B2
      Fraction c12 = c * c2 * qp(rd_.form(t.k, rd_.weight_of(t2.e)));
      Weight nu = add(t.k, t2.k);
      for (const auto& [a3, c3] : mul_mono(Side::E, t.e, t2.e)) {
        const AlgebraElement left = cross(f1, a3);
        for (const auto& [t4, c4] : left.terms()) {
          // (A4 K_nu4 B4) K_nu B2 = q^{(nu, wt B4)} A4 K_{nu4+nu} (B4 B2)
          Fraction c1234 = c12 * c3 * c4 * qp(rd_.form(nu, rd_.weight_of(t4.f)));
          Weight kk = add(t4.k, nu);
          for (const auto& [b5, c5] : mul_mono(Side::F, t4.f, t2.f)) out.add({t4.e, kk, b5}, c1234 * c5);
        }
      }
    }
  }
  std::lock_guard lock(cache_mutex_);
  cross_cache_.emplace(std::make_pair(f, e), out);
  return out;
}

AlgebraElement QuantumAlgebra::multiply_terms(const PBWMonomial& x, const PBWMonomial& y) const {
  AlgebraElement out;
  const AlgebraElement middle = cross(x.f, y.e);
  for (const auto& [t, c] : middle.terms()) {
    Fraction c1 = c * qp(rd_.form(x.k, rd_.weight_of(t.e))) * qp(rd_.form(y.k, rd_.weight_of(t.f)));
    Weight kk = add(add(x.k, t.k), y.k);
    MonoVec es = mul_mono(Side::E, x.e, t.e);
    MonoVec fs = mul_mono(Side::F, t.f, y.f);
    for (const auto& [a, ca] : es)
      for (const auto& [b, cb] : fs) out.add({a, kk, b}, c1 * ca * cb);
  }
  return out;
}

AlgebraElement QuantumAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Fraction c = cx * cy;
      const AlgebraElement xy = multiply_terms(mx, my);
      for (const auto& [m, d] : xy.terms()) out.add(m, c * d);
    }
  }
  return out;
}

AlgebraElement QuantumAlgebra::power(const AlgebraElement& x, int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a non-torus element");
  AlgebraElement out = one();
  for (int t = 0; t < n; ++t) out = multiply(out, x);
  return out;
}

AlgebraElement QuantumAlgebra::commutator(const AlgebraElement& x, const AlgebraElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

AlgebraElement QuantumAlgebra::braid(int i, const AlgebraElement& x, bool inverse) const {
  if (i < 0 || i >= rd_.rank()) throw Error(ErrorKind::InvalidArgument, "braid index out of range");
  const auto& te = braid_e_[inverse ? 1 : 0][i];
  const auto& tf = braid_f_[inverse ? 1 : 0][i];
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    AlgebraElement t = scalar(c);
    for (int k = 0; k < n_; ++k)
      for (int a = 0; a < m.e[k]; ++a) t = multiply(t, te[k]);
    t = multiply(t, this->k(rd_.reflect(i, m.k)));
    for (int k = 0; k < n_; ++k)
      for (int b = 0; b < m.f[k]; ++b) t = multiply(t, tf[k]);
    out += t;
  }
  return out;
}

AlgebraElement QuantumAlgebra::braid_word(const std::vector<int>& word, const AlgebraElement& x) const {
  AlgebraElement out = x;
  for (size_t t = word.size(); t-- > 0;) out = braid(word[t], out);
  return out;
}

Fraction QuantumAlgebra::counit(const AlgebraElement& x) const {
  Fraction out;
  for (const auto& [m, c] : x.terms())
    if (last_nonzero(m.e) < 0 && last_nonzero(m.f) < 0) out += c;
  return out;
}

PBWMonomial QuantumAlgebra::random_monomial(std::mt19937_64& rng, int max_degree, int max_k) const {
  PBWMonomial m = unit_monomial();
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> side(0, 1);
  std::uniform_int_distribution<int> idx(0, n_ - 1);
  std::uniform_int_distribution<int> kk(-max_k, max_k);
  int d = deg(rng);
  for (int t = 0; t < d; ++t) (side(rng) ? m.e : m.f)[idx(rng)]++;
  for (int& c : m.k) c = kk(rng);
  return m;
}

void QuantumAlgebra::audit_associativity(std::uint64_t seed, int samples, int max_degree) const {
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    // Split the degree budget over the three factors.
    auto x = AlgebraElement::monomial(random_monomial(rng, max_degree / 3 + (max_degree % 3 > 0)));
    auto y = AlgebraElement::monomial(random_monomial(rng, max_degree / 3 + (max_degree % 3 > 1)));
    auto z = AlgebraElement::monomial(random_monomial(rng, max_degree / 3));
    if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
      throw Error(ErrorKind::ConfluenceFailure,
                  "associativity fails for sample " + std::to_string(s) + " (seed " + std::to_string(seed) + ")");
    }
  }
}

std::string exps_to_string(const std::vector<int>& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : x.terms())
    out << c.to_string() << " | " << exps_to_string(m.e) << " | " << exps_to_string(m.k) << " | "
        << exps_to_string(m.f) << "\n";
  return out.str();
}

}  // namespace qsp
