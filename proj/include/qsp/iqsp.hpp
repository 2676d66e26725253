#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/gstar.hpp"

namespace qsp {

/// Satake data (I = I_circ + I_black, tau, I_circ'), parameters varsigma_i and
/// the lattice data derived from theta = -w_black tau. Node indices are
/// 0-based internally.
struct SatakeInput {
  std::string type = "A1";
  std::vector<int> black;       // 1-based
  std::vector<int> tau;         // 1-based permutation; empty means identity
  std::vector<int> circ_prime;  // 1-based; empty selects orbit minima
  std::map<int, Laurent> sigma; // 1-based node -> varsigma_i
  std::vector<int> word;        // optional reduced word of w0, 1-based
};

/// Parses `key=value` lines: type, tau (id, swap(i,j) or a comma list),
/// I_black, I_circ_prime, sigma_<i>, word. `#` starts a comment.
SatakeInput parse_satake(std::string_view text);

class SatakeContext {
 public:
  SatakeContext(const SatakeInput& input, bool allow_extended);
  SatakeContext(const SatakeContext&) = delete;
  SatakeContext& operator=(const SatakeContext&) = delete;

  const QuantumAlgebra& algebra() const { return *U_; }
  const GStar& gstar() const { return *G_; }
  const RootData& root_data() const { return U_->root_data(); }
  int rank() const { return root_data().rank(); }

  bool is_black(int i) const { return black_[i]; }
  int tau(int i) const { return tau_[i]; }
  bool is_circ_prime(int i) const { return circ_prime_[i]; }
  const Laurent& sigma(int i) const { return sigma_[i]; }
  int c(int i) const { return c_[i]; }
  /// Reduced word of w_black (0-based); it is a prefix of the word of U.
  const std::vector<int>& black_word() const { return black_word_; }
  int black_length() const { return static_cast<int>(black_word_.size()); }

  /// theta = -w_black tau on Q.
  Weight theta(const Weight& mu) const;
  const std::vector<Weight>& fixed_lattice_basis() const { return fixed_basis_; }
  /// Component of mu in Q^theta along Q = Q^theta + Z[alpha_i : i in I_circ'].
  Weight fixed_component(const Weight& mu) const;

  /// B_i (= F_i for black i), k_i = K_i K_{tau i}^{-1}.
  AlgebraElement ib(int i) const;
  AlgebraElement ik(int i) const;

  /// pi = pi+ (x) pi0 (x) id onto U_P.
  AlgebraElement parabolic_project(const AlgebraElement& x) const;
  PoissonElement parabolic_project(const PoissonElement& x) const;
  /// Coordinate form of the restriction to P.
  CoordElement iota_star(const CoordElement& x) const;

  std::string label() const;

 private:
  std::unique_ptr<QuantumAlgebra> U_;
  std::unique_ptr<GStar> G_;
  std::vector<bool> black_;
  std::vector<int> tau_;
  std::vector<bool> circ_prime_;
  std::vector<Laurent> sigma_;
  std::vector<int> c_;
  std::vector<int> black_word_;
  std::vector<Weight> fixed_basis_;
  std::vector<std::vector<Rational>> decompose_;  // inverse of [fixed basis | alpha_i, i in I_circ']
};

struct IGenerator {
  std::string name;
  AlgebraElement quantum;
  CoordElement value;     // phi(specialize(quantum))
  CoordElement expected;  // the coordinate expression of the lemma
};

/// Images of B_i, k_i (i in I_circ) and E_i, F_i, K_i^{+-1} (i black);
/// throws MismatchWithLemma when one differs from the expected expression.
std::vector<IGenerator> specialized_igenerators(const SatakeContext& ctx);

/// Poisson generators used for closures: b_i, chi+-_i (black) and torus units.
std::vector<std::pair<std::string, CoordElement>> poisson_generators(const SatakeContext& ctx);

struct LetzterReport {
  int words = 0;           // i-monomials of length <= d
  int dimension = 0;       // dim of their span over Q(v)
  int saturations = 0;     // divisions by v - 1 performed
  int projected_rank = 0;  // rank of pi of the specialized lattice
  int slice_dimension = 0;
  bool torus_collapsed = false;  // slice compared after K_mu -> 1
  int diagram_checks = 0;
};

/// Diagram check on generators and the degree-d rank comparison for the
/// Letzter map; throws DiagramFailure or RankDeficit.
LetzterReport letzter_project_check(const SatakeContext& ctx, int degree);

struct ClosureReport {
  std::vector<int> dimensions;  // dim C_m for m = 0..d
  int restricted_rank = 0;      // rank of iota*(C_d)
  int slice_dimension = 0;
  bool torus_collapsed = false;
  bool matches_lattice = false;  // C_d equals phi of the specialized lattice
  int bracket_checks = 0;
};

/// Poisson-polynomial closure of the generator images to degree d; throws
/// ClosureEscape or RankDeficit.
ClosureReport invariant_closure(const SatakeContext& ctx, int degree);

/// Exponent vectors of PBW F-monomials with total height <= d.
std::vector<Exps> f_slice(const RootData& rd, int degree);

}  // namespace qsp
