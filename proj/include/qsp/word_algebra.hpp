#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <vector>

#include "qsp/cartan.hpp"
#include "qsp/linalg.hpp"

namespace qsp {

using Word = std::vector<int>;
using WordVec = std::map<Word, Fraction>;

struct WordKey {
  Word e;
  Weight k;
  Word f;
  auto operator<=>(const WordKey&) const = default;
};

using WordElem = std::map<WordKey, Fraction>;

/// U in the presentation by Chevalley generators: elements are sums of
/// E-word * K_mu * F-word with both words reduced modulo the q-Serre ideal.
/// The Serre ideal is handled weight space by weight space through an
/// echelon basis, so normal forms need no root vectors. The PBW engine uses
/// this model to derive its straightening tables.
class WordAlgebra {
 public:
  explicit WordAlgebra(const RootData& rd) : rd_(rd) {}

  const RootData& root_data() const { return rd_; }

  WordElem one() const;
  WordElem generator(const Gen& g) const;
  WordElem from_products(const std::vector<GenProduct>& sum) const;

  WordElem multiply(const WordElem& x, const WordElem& y) const;
  WordElem braid(int i, const WordElem& x, bool inverse = false) const;

  /// Reduces a combination of words (E- or F-words; the Serre ideals have the
  /// same shape) to its normal form.
  WordVec reduce(const WordVec& v) const;
  /// Words of the given weight that are not leading words of the ideal.
  std::vector<Word> normal_words(const Weight& w) const;

  Weight weight_of(const Word& w) const;

 private:
  using Row = SparseVec<Word, Fraction>;
  const Echelon<Word, Fraction>& ideal(const Weight& w) const;
  WordElem normalize(const WordElem& x) const;

  const RootData& rd_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, Echelon<Word, Fraction>> ideals_;
};

/// All words with the given letter multiplicities.
std::vector<Word> words_of_weight(const Weight& w);

}  // namespace qsp
