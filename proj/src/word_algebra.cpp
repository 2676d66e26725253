#include "qsp/word_algebra.hpp"

#include <utility>

#include "qsp/error.hpp"

namespace qsp {

namespace {

void collect(std::vector<Word>& out, Word& cur, Weight& left, int remaining) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = 0; i < left.size(); ++i) {
    if (left[i] == 0) continue;
    --left[i];
    cur.push_back(static_cast<int>(i));
    collect(out, cur, left, remaining - 1);
    cur.pop_back();
    ++left[i];
  }
}

Fraction qp(int n) { return Fraction(q_pow(n)); }

void add_to(WordElem& x, WordKey key, const Fraction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Weight add(const Weight& a, const Weight& b) {
  Weight out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

struct Piece {
  Fraction coeff;
  Word e;
  Weight k;
  Word f;
};

}  // namespace

std::vector<Word> words_of_weight(const Weight& w) {
  std::vector<Word> out;
  int total = 0;
  for (int c : w) {
    if (c < 0) return out;
    total += c;
  }
  Word cur;
  Weight left = w;
  collect(out, cur, left, total);
  return out;
}

Weight WordAlgebra::weight_of(const Word& w) const {
  Weight out = rd_.zero();
  for (int x : w) ++out[x];
  return out;
}

const Echelon<Word, Fraction>& WordAlgebra::ideal(const Weight& w) const {
  std::lock_guard lock(mutex_);
  auto it = ideals_.find(w);
  if (it != ideals_.end()) return it->second;

  Echelon<Word, Fraction> ech;
  const int r = rd_.rank();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      Row rel;
      Weight rel_weight = rd_.zero();
      if (rd_.a(i, j) == 0) {
        if (i > j) continue;
        rel[{i, j}] = Fraction(1);
        rel[{j, i}] = Fraction(-1);
        rel_weight[i] = 1;
        rel_weight[j] = 1;
      } else {
        const int e = rd_.eps(i);
        rel[{i, i, j}] = Fraction(1);
        rel[{i, j, i}] = -Fraction(q_pow(e) + q_pow(-e));
        rel[{j, i, i}] = Fraction(1);
        rel_weight[i] = 2;
        rel_weight[j] = 1;
      }
      Weight rest = w;
      bool fits = true;
      for (int t = 0; t < r; ++t) {
        rest[t] -= rel_weight[t];
        if (rest[t] < 0) fits = false;
      }
      if (!fits) continue;
      for (const Word& x : words_of_weight(rest)) {
        for (size_t split = 0; split <= x.size(); ++split) {
          Word pre(x.begin(), x.begin() + static_cast<long>(split));
          Word suf(x.begin() + static_cast<long>(split), x.end());
          Row row;
          for (const auto& [word, c] : rel) row.emplace(concat(concat(pre, word), suf), c);
          ech.insert(row);
        }
      }
    }
  }
  return ideals_.emplace(w, std::move(ech)).first->second;
}

WordVec WordAlgebra::reduce(const WordVec& v) const {
  std::map<Weight, WordVec> by_weight;
  for (const auto& [w, c] : v) by_weight[weight_of(w)].emplace(w, c);
  WordVec out;
  for (auto& [wt, part] : by_weight) {
    for (auto& [w, c] : ideal(wt).reduce(std::move(part))) out.emplace(w, c);
  }
  return out;
}

std::vector<Word> WordAlgebra::normal_words(const Weight& w) const {
  const auto& ech = ideal(w);
  std::vector<Word> out;
  for (const Word& x : words_of_weight(w))
    if (!ech.rows().count(x)) out.push_back(x);
  return out;
}

WordElem WordAlgebra::normalize(const WordElem& x) const {
  // E-parts grouped by (K, F-word), then F-parts grouped by (E-word, K).
  std::map<std::pair<Weight, Word>, WordVec> e_groups;
  for (const auto& [key, c] : x) {
    auto& g = e_groups[{key.k, key.f}];
    auto [it, inserted] = g.try_emplace(key.e, c);
    if (!inserted) it->second += c;
  }
  std::map<std::pair<Word, Weight>, WordVec> f_groups;
  for (auto& [kf, vec] : e_groups) {
    std::erase_if(vec, [](const auto& p) { return p.second.is_zero(); });
    for (const auto& [e, c] : reduce(vec)) {
      auto& g = f_groups[{e, kf.first}];
      auto [it, inserted] = g.try_emplace(kf.second, c);
      if (!inserted) it->second += c;
    }
  }
  WordElem out;
  for (auto& [ek, vec] : f_groups) {
    std::erase_if(vec, [](const auto& p) { return p.second.is_zero(); });
    for (const auto& [f, c] : reduce(vec)) add_to(out, {ek.first, ek.second, f}, c);
  }
  return out;
}

WordElem WordAlgebra::one() const {
  WordElem out;
  out[{{}, rd_.zero(), {}}] = Fraction(1);
  return out;
}

WordElem WordAlgebra::generator(const Gen& g) const {
  WordElem out;
  switch (g.kind) {
    case Gen::Kind::E: out[{{g.index}, rd_.zero(), {}}] = Fraction(1); break;
    case Gen::Kind::F: out[{{}, rd_.zero(), {g.index}}] = Fraction(1); break;
    case Gen::Kind::K: out[{{}, g.weight, {}}] = Fraction(1); break;
  }
  return out;
}

WordElem WordAlgebra::from_products(const std::vector<GenProduct>& sum) const {
  WordElem out;
  for (const auto& p : sum) {
    WordElem term = one();
    for (const auto& g : p.letters) term = multiply(term, generator(g));
    for (const auto& [k, c] : term) add_to(out, k, c * p.coeff);
  }
  return out;
}

WordElem WordAlgebra::multiply(const WordElem& x, const WordElem& y) const {
  WordElem raw;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      // F-word of x moved across the E-word of y, one F letter at a time
      // from the right: F_j E_w = E_w F_j - (q_j - q_j^{-1}) sum over
      // occurrences of j in w of E_pre (K_j^{-1} - K_j) E_suf.
      std::vector<Piece> cur{{Fraction(1), ky.e, rd_.zero(), {}}};
      for (size_t t = kx.f.size(); t-- > 0;) {
        const int j = kx.f[t];
        const Weight aj = rd_.simple(j);
        Weight aj_neg = aj;
        aj_neg[j] = -1;
        const Fraction qdiff(Laurent::q_diff(rd_.eps(j)));
        std::vector<Piece> next;
        for (auto& p : cur) {
          // Swap term: F_j (E_w K_nu f) = E_w F_j K_nu f = q^{(nu, a_j)} E_w K_nu (F_j f).
          Word fj = {j};
          next.push_back({p.coeff * qp(rd_.form(p.k, aj)), p.e, p.k, concat(fj, p.f)});
          for (size_t s = 0; s < p.e.size(); ++s) {
            if (p.e[s] != j) continue;
            Word pre(p.e.begin(), p.e.begin() + static_cast<long>(s));
            Word suf(p.e.begin() + static_cast<long>(s) + 1, p.e.end());
            const int pr = rd_.form(aj, weight_of(suf));
            Word ew = concat(pre, suf);
            next.push_back({-qdiff * qp(-pr) * p.coeff, ew, add(aj_neg, p.k), p.f});
            next.push_back({qdiff * qp(pr) * p.coeff, ew, add(aj, p.k), p.f});
          }
        }
        cur = std::move(next);
      }
      for (auto& p : cur) {
        Fraction c = cx * cy * p.coeff * qp(rd_.form(kx.k, weight_of(p.e))) *
                     qp(rd_.form(ky.k, weight_of(p.f)));
        add_to(raw, {concat(kx.e, p.e), add(add(kx.k, p.k), ky.k), concat(p.f, ky.f)}, c);
      }
    }
  }
  return normalize(raw);
}

WordElem WordAlgebra::braid(int i, const WordElem& x, bool inverse) const {
  WordElem out;
  for (const auto& [key, c] : x) {
    WordElem term = one();
    for (int l : key.e) term = multiply(term, from_products(braid_image(rd_, i, {Gen::Kind::E, l, {}}, inverse)));
    term = multiply(term, from_products(braid_image(rd_, i, {Gen::Kind::K, 0, key.k}, inverse)));
    for (int l : key.f) term = multiply(term, from_products(braid_image(rd_, i, {Gen::Kind::F, l, {}}, inverse)));
    for (const auto& [k, d] : term) add_to(out, k, d * c);
  }
  return out;
}

}  // namespace qsp
