#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsp/scalar.hpp"

namespace qsp {

/// Element of the root lattice Q in the basis of simple roots.
using Weight = std::vector<int>;

struct CartanInput {
  std::string label;
  std::vector<std::vector<int>> matrix;
  std::vector<int> symmetrizers;
  std::vector<int> word;  // 1-based node labels, as written by users
};

/// Finite-type input for one of the supported labels ("A1", "A1xA1", "A2",
/// "A3"). An empty word selects the default reduced word for w0.
CartanInput cartan_input(std::string_view label, std::vector<int> word = {});

/// Cartan matrix, symmetrisers, the chosen reduced word of w0 and the
/// positive roots it enumerates. Node indices are 0-based internally.
class RootData {
 public:
  /// Validates scope, finiteness and reducedness of the word.
  RootData(const CartanInput& input, bool allow_extended);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  int a(int i, int j) const { return matrix_[i][j]; }
  int eps(int i) const { return eps_[i]; }
  /// (alpha_i, alpha_j) = eps_i a_ij.
  int form(int i, int j) const { return eps_[i] * matrix_[i][j]; }
  int form(const Weight& x, const Weight& y) const;

  const std::vector<int>& word() const { return word_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  /// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}), k = 0..n-1.
  const Weight& root(int k) const { return roots_[k]; }
  const std::vector<Weight>& roots() const { return roots_; }
  int height(int k) const;
  /// Index k with beta_k = alpha_j.
  int simple_root_position(int j) const { return simple_pos_[j]; }

  Weight simple(int i) const;
  Weight zero() const { return Weight(matrix_.size(), 0); }
  Weight reflect(int i, const Weight& mu) const;

  /// Weight of an exponent vector over the root vectors.
  Weight weight_of(const std::vector<int>& exps) const;

  /// Positive roots of the root system (independent of the word).
  const std::vector<Weight>& positive_roots() const { return positive_; }

 private:
  std::string label_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> eps_;
  std::vector<int> word_;
  std::vector<Weight> roots_;
  std::vector<int> simple_pos_;
  std::vector<Weight> positive_;
};

/// One letter of a product of generators.
struct Gen {
  enum class Kind { E, F, K };
  Kind kind;
  int index = 0;  // E/F
  Weight weight;  // K
};

/// coeff * letters[0] * letters[1] * ...
struct GenProduct {
  Fraction coeff;
  std::vector<Gen> letters;
};

/// Image of a Chevalley generator under the braid operator T_i (or its
/// inverse) in the rescaled generators, as a sum of generator products.
std::vector<GenProduct> braid_image(const RootData& rd, int i, const Gen& g, bool inverse);

/// c_i = q_i^{1/2}(q_i^{-1} - q_i) and d_i = q_i^{-1/2}(q_i - q_i^{-1}): the
/// rescaling factors E_i = c_i * E_i(Jantzen), F_i = d_i * F_i(Jantzen).
Laurent rescale_e(int eps);
Laurent rescale_f(int eps);

}  // namespace qsp
