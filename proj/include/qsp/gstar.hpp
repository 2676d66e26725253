#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/specialization.hpp"

namespace qsp {

/// chi+^plus * alpha^alpha * chi-^minus.
struct CoordKey {
  Exps plus;
  Weight alpha;
  Exps minus;
  auto operator<=>(const CoordKey&) const = default;
};

/// Polynomial in chi+_k, chi-_k and Laurent in the lattice variables a_i.
class CoordElement {
 public:
  using Terms = std::map<CoordKey, Rational>;

  CoordElement() = default;
  static CoordElement monomial(CoordKey key, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const CoordKey& key, const Rational& c);
  CoordElement& operator+=(const CoordElement& o);
  CoordElement& operator-=(const CoordElement& o);
  CoordElement operator-() const;
  friend CoordElement operator+(CoordElement a, const CoordElement& b) { return a += b; }
  friend CoordElement operator-(CoordElement a, const CoordElement& b) { return a -= b; }
  friend CoordElement operator*(const Rational& c, const CoordElement& x);
  friend CoordElement operator*(const CoordElement& x, const CoordElement& y);
  friend bool operator==(const CoordElement& a, const CoordElement& b) = default;

 private:
  Terms terms_;
};

/// Relabels E(a) K_mu F(b) as chi+^a alpha^mu chi-^b.
CoordElement phi(const PoissonElement& p);
PoissonElement phi_inverse(const CoordElement& a);

/// Coordinate functions on G* for the reduced word of U, with the bracket
/// transported from the semiclassical limit.
class GStar {
 public:
  explicit GStar(const QuantumAlgebra& U);

  const QuantumAlgebra& algebra() const { return U_; }
  int num_roots() const { return n_; }
  int rank() const { return r_; }

  CoordElement one() const;
  CoordElement constant(const Rational& c) const;
  CoordElement chi_plus(int k) const;  // 0-based root index
  CoordElement chi_minus(int k) const;
  CoordElement alpha(const Weight& mu) const;
  /// chi+_j, chi-_j for the simple root alpha_j.
  CoordElement simple_plus(int j) const;
  CoordElement simple_minus(int j) const;

  /// Generators in the order chi+_1..n, chi-_1..n, a_1..r.
  int num_variables() const { return 2 * n_ + r_; }
  CoordElement variable(int v) const;
  std::string variable_name(int v) const;

  /// Bracket through the quantum commutator (definition).
  CoordElement bracket_quantum(const CoordElement& a, const CoordElement& b) const;
  /// Same bracket expanded as a biderivation over the generator table.
  CoordElement bracket(const CoordElement& a, const CoordElement& b) const;
  /// {x_a, x_b} for generators.
  const CoordElement& generator_bracket(int a, int b) const { return table_[a][b]; }

  /// Ring map fixing the a_i and sending chi+_k, chi-_k to the given images.
  static CoordElement substitute(const CoordElement& x, const std::vector<CoordElement>& plus,
                                 const std::vector<CoordElement>& minus, const CoordElement& one);

  /// Partial derivative with respect to generator v.
  CoordElement derivative(const CoordElement& x, int v) const;

 private:
  const QuantumAlgebra& U_;
  PoissonStructure poisson_;
  int n_;
  int r_;
  std::vector<std::vector<CoordElement>> table_;
};

struct Grade {
  bool homogeneous = true;
  bool zero = false;
  Weight degree;
};

/// Z[I]-degree: chi-_k has degree beta_k, chi+_k degree -beta_k, a_i degree 0.
Grade grade(const RootData& rd, const CoordElement& a);

/// Compares the brackets among chi+_j, chi-_j, a_j computed for two reduced
/// words, after rewriting the first coordinates in terms of the second. The
/// rewriting comes from the specialized root vectors of U1 expanded in the
/// PBW basis of U2.
bool reduced_word_consistency(const QuantumAlgebra& U1, const QuantumAlgebra& U2, std::string* report = nullptr);

/// chi+/chi- images of the coordinates of U1 in the coordinates of U2.
std::pair<std::vector<CoordElement>, std::vector<CoordElement>> coordinate_change(const QuantumAlgebra& U1,
                                                                                   const QuantumAlgebra& U2);

std::string to_string(const CoordElement& a);

std::complex<double> evaluate(const CoordElement& a, const std::vector<std::complex<double>>& plus,
                              const std::vector<std::complex<double>>& alpha,
                              const std::vector<std::complex<double>>& minus);

}  // namespace qsp
