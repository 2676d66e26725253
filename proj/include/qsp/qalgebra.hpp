#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "qsp/cartan.hpp"
#include "qsp/linalg.hpp"
#include "qsp/word_algebra.hpp"

namespace qsp {

/// Exponents of the root vectors X_1..X_n (or Y_1..Y_n), in increasing index.
using Exps = std::vector<int>;

/// E_{i}(a) K_mu F_{i}(b) in the order E-part, K-part, F-part.
struct PBWMonomial {
  Exps e;
  Weight k;
  Exps f;

  int degree() const;
  auto operator<=>(const PBWMonomial&) const = default;
};

class AlgebraElement {
 public:
  using Terms = std::map<PBWMonomial, Fraction>;

  AlgebraElement() = default;
  explicit AlgebraElement(Terms terms);
  static AlgebraElement monomial(PBWMonomial m, const Fraction& c = Fraction(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const PBWMonomial& m, const Fraction& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Fraction& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

 private:
  Terms terms_;
};

/// U_q(g) in rescaled generators with PBW normal form for one reduced word.
///
/// Root vectors X_k = T_{i_1}...T_{i_{k-1}}(E_{i_k}) and Y_k (same with F) are
/// computed once in the word model, which also yields the straightening
/// tables X_l X_k, Y_l Y_k (l > k) and Y_m X_l. Products are then formed by
/// rewriting with the tables alone.
class QuantumAlgebra {
 public:
  QuantumAlgebra(const CartanInput& input, bool allow_extended);
  QuantumAlgebra(const QuantumAlgebra&) = delete;
  QuantumAlgebra& operator=(const QuantumAlgebra&) = delete;

  const RootData& root_data() const { return rd_; }
  int num_roots() const { return rd_.num_roots(); }

  AlgebraElement one() const;
  AlgebraElement scalar(const Fraction& c) const;
  AlgebraElement e(int i) const;  // simple generators, 0-based
  AlgebraElement f(int i) const;
  AlgebraElement k(const Weight& mu) const;
  AlgebraElement root_e(int k) const;  // X_k, 0-based
  AlgebraElement root_f(int k) const;  // Y_k
  AlgebraElement from_products(const std::vector<GenProduct>& sum) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement power(const AlgebraElement& x, int n) const;
  AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) const;

  /// T_i (or T_i^{-1}).
  AlgebraElement braid(int i, const AlgebraElement& x, bool inverse = false) const;
  /// T_{w_1} T_{w_2} ... T_{w_r}(x), letters 0-based.
  AlgebraElement braid_word(const std::vector<int>& word, const AlgebraElement& x) const;

  Fraction counit(const AlgebraElement& x) const;

  Weight weight(const PBWMonomial& m) const;
  PBWMonomial unit_monomial() const;

  /// Straightening data, keyed (l, k) for the out-of-order products.
  const std::map<std::pair<int, int>, AlgebraElement>& e_table() const { return e_table_; }
  const std::map<std::pair<int, int>, AlgebraElement>& f_table() const { return f_table_; }
  const std::map<std::pair<int, int>, AlgebraElement>& cross_table() const { return cross_table_; }
  /// X_k as a combination of words in the E_i.
  const WordVec& root_word(int k) const { return e_words_[k]; }
  /// Y_k as a combination of words in the F_i.
  const WordVec& root_word_f(int k) const { return f_words_[k]; }

  PBWMonomial random_monomial(std::mt19937_64& rng, int max_degree, int max_k = 1) const;
  /// (xy)z == x(yz) on random monomial triples; throws ConfluenceFailure.
  void audit_associativity(std::uint64_t seed, int samples, int max_degree) const;

 private:
  using MonoVec = std::map<Exps, Fraction>;
  enum class Side { E, F };

  void build_root_vectors();
  void build_tables();
  void build_braid_images();

  WordVec word_product(const WordVec& a, const WordVec& b) const;
  WordVec monomial_words(Side side, const Exps& a);
  MonoVec to_pbw(Side side, const WordVec& v);
  AlgebraElement split_pbw(const WordElem& x);

  MonoVec mul_letter(Side side, const Exps& a, int k) const;
  MonoVec mul_mono(Side side, const Exps& a, const Exps& b) const;
  AlgebraElement cross(const Exps& f, const Exps& e) const;
  AlgebraElement multiply_terms(const PBWMonomial& x, const PBWMonomial& y) const;

  RootData rd_;
  WordAlgebra words_;
  int n_ = 0;

  std::vector<WordVec> e_words_;
  std::vector<WordVec> f_words_;
  std::map<Weight, Echelon<std::pair<int, Word>, Fraction>> e_basis_;
  std::map<Weight, Echelon<std::pair<int, Word>, Fraction>> f_basis_;

  std::map<std::pair<int, int>, AlgebraElement> e_table_;
  std::map<std::pair<int, int>, AlgebraElement> f_table_;
  std::map<std::pair<int, int>, AlgebraElement> cross_table_;
  // Flattened tables for the rewriting loops.
  std::vector<std::vector<MonoVec>> e_rules_;
  std::vector<std::vector<MonoVec>> f_rules_;

  // braid_[inverse][i][k] = T_i^{+-1}(X_k); same for Y.
  std::vector<std::vector<AlgebraElement>> braid_e_[2];
  std::vector<std::vector<AlgebraElement>> braid_f_[2];

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Exps, int>, MonoVec> e_cache_;
  mutable std::map<std::pair<Exps, int>, MonoVec> f_cache_;
  mutable std::map<std::pair<Exps, Exps>, AlgebraElement> cross_cache_;
};

/// One line per term: `coeff | E-exps | K-weight | F-exps`.
std::string to_string(const AlgebraElement& x);
std::string exps_to_string(const std::vector<int>& a);

}  // namespace qsp
