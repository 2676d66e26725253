#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qsp/gstar.hpp"

namespace qsp {

/// Polynomial in the Stokes entries s_ij (i < j), ordered s12 < s13 < ... < s23 < ...
class SPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  SPoly() = default;
  static SPoly variable(int m, int a);
  static SPoly constant(int m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<int>& e, const Rational& c);
  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const Rational& c, const SPoly& a);
  friend bool operator==(const SPoly& a, const SPoly& b) = default;
  SPoly derivative(int a) const;

 private:
  Terms terms_;
};

using SymMatrix = std::vector<std::vector<CoordElement>>;
using CMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// The pair (sl_n, so_n) with theta(g) = transpose(g)^-1, all c_i = -1.
/// u+ = x_N(a_N)...x_1(a_1), u- = y_1(b_1)...y_N(b_N) with
/// x_k(a) = I + a w_k E_{i_k,i_k+1} w_k^-1 along the reduced word, and the
/// Stokes matrix S = transpose(u-) Ad_{t^-1}(u+).
class StokesContext {
 public:
  /// word is 1-based; empty selects 1,2,1,3,2,1,...
  StokesContext(int n, const std::vector<int>& word, bool allow_extended);
  StokesContext(const StokesContext&) = delete;
  StokesContext& operator=(const StokesContext&) = delete;

  int n() const { return n_; }
  const QuantumAlgebra& algebra() const { return *U_; }
  const GStar& gstar() const { return *G_; }
  const std::vector<int>& word() const { return word_; }

  const SymMatrix& u_plus() const { return u_plus_; }
  const SymMatrix& u_minus() const { return u_minus_; }
  const SymMatrix& stokes() const { return s_; }

  /// Entries s_ij, i < j, enumerated row by row.
  int num_entries() const { return static_cast<int>(pairs_.size()); }
  std::pair<int, int> entry_pair(int a) const { return pairs_[a]; }
  int entry_index(int i, int j) const;
  const CoordElement& entry(int a) const { return s_[pairs_[a].first][pairs_[a].second]; }
  std::string entry_name(int a) const;

  /// {s_a, s_b} rewritten as a polynomial in the s-entries; throws RewriteFailure.
  SPoly du_bracket(int a, int b) const;
  /// Bracket of s-polynomials through the table of du_bracket.
  SPoly bracket(const SPoly& x, const SPoly& y) const;
  /// Coordinate expression of an s-polynomial.
  CoordElement expand(const SPoly& p) const;

  std::string to_string(const SPoly& p) const;

  /// Signed permutation matrix of the simple reflection s_i (0-based).
  std::vector<std::vector<int>> sdot(int i) const;

 private:
  const CoordElement& s_monomial(const std::vector<int>& e) const;

  int n_;
  std::vector<int> word_;  // 0-based
  std::unique_ptr<QuantumAlgebra> U_;
  std::unique_ptr<GStar> G_;
  SymMatrix u_plus_, u_minus_, s_;
  std::vector<std::pair<int, int>> pairs_;

  mutable std::map<std::vector<int>, CoordElement> monomials_;
  mutable std::map<int, std::unique_ptr<TrackedEchelon<CoordKey>>> ansatz_;
  mutable std::map<int, std::vector<std::vector<int>>> ansatz_keys_;
  mutable std::map<std::pair<int, int>, SPoly> table_;
};

struct BracketEntry {
  int a, b;
  SPoly value;
};

/// {s_a, s_b} for a <= b.
std::vector<BracketEntry> bracket_table(const StokesContext& ctx);
/// Skew-symmetry of the table and the Jacobi identity on all triples of
/// s-entries, exactly; returns the number of identities checked.
int check_bracket_axioms(const StokesContext& ctx);

struct NumericGroupPoint {
  CMatrix plus;   // upper triangular
  CMatrix minus;  // lower triangular
};

struct NumericCoords {
  std::vector<cplx> plus;   // a_k
  std::vector<cplx> alpha;  // alpha_i = t_i / t_{i+1}
  std::vector<cplx> minus;  // b_k
};

NumericGroupPoint random_group_point(int n, std::mt19937_64& rng);
/// (theta(k-), k-) for a random invertible lower triangular k-.
NumericGroupPoint random_k_perp(int n, std::mt19937_64& rng);
NumericGroupPoint operator*(const NumericGroupPoint& x, const NumericGroupPoint& y);

/// Coordinates of g = (u+ t, t^-1 u-) read off by peeling the factors.
NumericCoords numeric_coordinates(const StokesContext& ctx, const NumericGroupPoint& g);
NumericGroupPoint from_coordinates(const StokesContext& ctx, const NumericCoords& c);
cplx evaluate(const CoordElement& f, const NumericCoords& c);

struct Factorization {
  NumericGroupPoint k;
  NumericGroupPoint p;
  double residual = 0;           // max |k p - g| and |k+ - theta(k-)|
  double closed_form_error = 0;  // |p- - Ad_t(transpose(u+)) u-|
};

/// g = k p with k in K-perp and p in P; throws SingularPoint.
Factorization numeric_factorize(const StokesContext& ctx, const NumericGroupPoint& g);

struct SampleReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0;
};

/// max |f(k g) - f(g)| over random k in K-perp and g in G*.
SampleReport invariance_sample_check(const StokesContext& ctx, const CoordElement& f, int samples,
                                     std::uint64_t seed);
/// Symbolic pullbacks (s-entries and the images of chi-_i) against the
/// numeric factorization.
SampleReport pullback_sample_check(const StokesContext& ctx, int samples, std::uint64_t seed);
/// max residual and closed-form error of numeric_factorize.
SampleReport factorization_sample_check(const StokesContext& ctx, int samples, std::uint64_t seed);

}  // namespace qsp
