#include "qsp/cartan.hpp"

#include <algorithm>
#include <set>

#include "qsp/error.hpp"

namespace qsp {

CartanInput cartan_input(std::string_view label, std::vector<int> word) {
  CartanInput in;
  in.label = std::string(label);
  if (label == "A1") {
    in.matrix = {{2}};
    if (word.empty()) word = {1};
  } else if (label == "A1xA1") {
    in.matrix = {{2, 0}, {0, 2}};
    if (word.empty()) word = {1, 2};
  } else if (label == "A2") {
    in.matrix = {{2, -1}, {-1, 2}};
    if (word.empty()) word = {1, 2, 1};
  } else if (label == "A3") {
    in.matrix = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    if (word.empty()) word = {1, 2, 1, 3, 2, 1};
  } else {
    throw Error(ErrorKind::UnsupportedType, "unsupported type '" + std::string(label) + "'");
  }
  in.symmetrizers.assign(in.matrix.size(), 1);
  in.word = std::move(word);
  return in;
}

RootData::RootData(const CartanInput& input, bool allow_extended)
    : label_(input.label), matrix_(input.matrix), eps_(input.symmetrizers) {
  const int r = static_cast<int>(matrix_.size());
  const int max_rank = allow_extended ? 3 : 2;
  if (r == 0 || r > max_rank) {
    throw Error(ErrorKind::UnsupportedType,
                "rank " + std::to_string(r) + " is outside the supported scope" +
                    (allow_extended ? "" : " (A3 needs the extended scope)"));
  }
  if (static_cast<int>(eps_.size()) != r) {
    throw Error(ErrorKind::UnsupportedType, "symmetrizer count does not match the rank");
  }
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(matrix_[i].size()) != r || matrix_[i][i] != 2 || eps_[i] <= 0) {
      throw Error(ErrorKind::UnsupportedType, "not a Cartan matrix");
    }
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      // Braid operators are implemented for simply-laced links only.
      if (matrix_[i][j] != 0 && matrix_[i][j] != -1) {
        throw Error(ErrorKind::UnsupportedType, "only simply-laced types are supported");
      }
      if (eps_[i] * matrix_[i][j] != eps_[j] * matrix_[j][i]) {
        throw Error(ErrorKind::UnsupportedType, "DA is not symmetric");
      }
    }
  }

  // Positive roots by closure under simple reflections; a cap detects
  // non-finite input such as the affine triangle.
  std::set<Weight> seen;
  std::vector<Weight> todo;
  for (int i = 0; i < r; ++i) {
    seen.insert(simple(i));
    todo.push_back(simple(i));
  }
  while (!todo.empty()) {
    Weight w = todo.back();
    todo.pop_back();
    for (int i = 0; i < r; ++i) {
      Weight s = reflect(i, w);
      if (std::all_of(s.begin(), s.end(), [](int c) { return c >= 0; }) && seen.insert(s).second) {
        if (seen.size() > 64) throw Error(ErrorKind::UnsupportedType, "Cartan matrix is not of finite type");
        todo.push_back(s);
      }
    }
  }
  positive_.assign(seen.begin(), seen.end());

  word_.reserve(input.word.size());
  for (int x : input.word) {
    if (x < 1 || x > r) {
      throw Error(ErrorKind::NonReducedWord, "word letter " + std::to_string(x) + " out of range");
    }
    word_.push_back(x - 1);
  }
  if (word_.size() != positive_.size()) {
    throw Error(ErrorKind::NonReducedWord,
                "a reduced word for w0 has length " + std::to_string(positive_.size()));
  }
  std::set<Weight> used;
  for (size_t k = 0; k < word_.size(); ++k) {
    Weight beta = simple(word_[k]);
    for (size_t j = k; j-- > 0;) beta = reflect(word_[j], beta);
    bool positive = std::all_of(beta.begin(), beta.end(), [](int c) { return c >= 0; });
    if (!positive || !used.insert(beta).second) {
      throw Error(ErrorKind::NonReducedWord, "word is not a reduced expression of w0");
    }
    roots_.push_back(beta);
  }
  simple_pos_.assign(r, -1);
  for (int k = 0; k < num_roots(); ++k) {
    if (height(k) == 1) {
      for (int j = 0; j < r; ++j)
        if (roots_[k][j] == 1) simple_pos_[j] = k;
    }
  }
}

int RootData::form(const Weight& x, const Weight& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += x[i] * y[j] * form(i, j);
  }
  return s;
}

int RootData::height(int k) const {
  int h = 0;
  for (int c : roots_[k]) h += c;
  return h;
}

Weight RootData::simple(int i) const {
  Weight w = zero();
  w[i] = 1;
  return w;
}

Weight RootData::reflect(int i, const Weight& mu) const {
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += mu[j] * matrix_[j][i];
  Weight out = mu;
  out[i] -= pairing;
  return out;
}

Weight RootData::weight_of(const std::vector<int>& exps) const {
  Weight w = zero();
  for (size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    for (int i = 0; i < rank(); ++i) w[i] += exps[k] * roots_[k][i];
  }
  return w;
}

Laurent rescale_e(int eps) {
  return Laurent::monomial(-eps) - Laurent::monomial(3 * eps);
}

Laurent rescale_f(int eps) {
  return Laurent::monomial(eps) - Laurent::monomial(-3 * eps);
}

namespace {

Gen gen_e(int i) { return {Gen::Kind::E, i, {}}; }
Gen gen_f(int i) { return {Gen::Kind::F, i, {}}; }
Gen gen_k(Weight w) { return {Gen::Kind::K, 0, std::move(w)}; }

}  // namespace

// Lusztig's T''_{i,-1} (and its inverse T'_{i,1}) conjugated through the
// rescaling E_i = c_i E_i, F_i = d_i F_i.
std::vector<GenProduct> braid_image(const RootData& rd, int i, const Gen& g, bool inverse) {
  const int ei = rd.eps(i);
  const Laurent qi = q_pow(ei);
  const Laurent qi_inv = q_pow(-ei);
  Weight ai = rd.simple(i);
  Weight ai_neg = ai;
  for (int& c : ai_neg) c = -c;

  if (g.kind == Gen::Kind::K) return {{Fraction(1), {gen_k(rd.reflect(i, g.weight))}}};

  const int j = g.index;
  if (j == i) {
    if (g.kind == Gen::Kind::E) {
      // T(E_i) = q_i F_i K_i;  T^{-1}(E_i) = q_i K_i^{-1} F_i.
      if (!inverse) return {{Fraction(qi), {gen_f(i), gen_k(ai)}}};
      return {{Fraction(qi), {gen_k(ai_neg), gen_f(i)}}};
    }
    // T(F_i) = q_i^{-1} K_i^{-1} E_i;  T^{-1}(F_i) = q_i^{-1} E_i K_i.
    if (!inverse) return {{Fraction(qi_inv), {gen_k(ai_neg), gen_e(i)}}};
    return {{Fraction(qi_inv), {gen_e(i), gen_k(ai)}}};
  }
  if (rd.a(i, j) == 0) return {{Fraction(1), {g}}};

  if (g.kind == Gen::Kind::E) {
    Fraction c = Fraction(1) / Fraction(rescale_e(ei));
    if (!inverse) {
      // (E_i E_j - q_i^{-1} E_j E_i) / c_i
      return {{c, {gen_e(i), gen_e(j)}}, {c * Fraction(-qi_inv), {gen_e(j), gen_e(i)}}};
    }
    // (E_j E_i - q_i^{-1} E_i E_j) / c_i
    return {{c, {gen_e(j), gen_e(i)}}, {c * Fraction(-qi_inv), {gen_e(i), gen_e(j)}}};
  }
  Fraction d = Fraction(1) / Fraction(rescale_f(ei));
  if (!inverse) {
    // (F_j F_i - q_i F_i F_j) / d_i
    return {{d, {gen_f(j), gen_f(i)}}, {d * Fraction(-qi), {gen_f(i), gen_f(j)}}};
  }
  // (F_i F_j - q_i F_j F_i) / d_i
  return {{d, {gen_f(i), gen_f(j)}}, {d * Fraction(-qi), {gen_f(j), gen_f(i)}}};
}

}  // namespace qsp
