#pragma once

#include <map>
#include <mutex>

#include "qsp/qalgebra.hpp"

namespace qsp {

/// Element of the commutative algebra obtained from the integral form at
/// v = 1, in the specialized PBW basis.
class PoissonElement {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  PoissonElement() = default;
  static PoissonElement monomial(PBWMonomial m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWMonomial& m, const Rational& c);
  PoissonElement& operator+=(const PoissonElement& o);
  PoissonElement& operator-=(const PoissonElement& o);
  friend PoissonElement operator+(PoissonElement a, const PoissonElement& b) { return a += b; }
  friend PoissonElement operator-(PoissonElement a, const PoissonElement& b) { return a -= b; }
  friend PoissonElement operator*(const Rational& c, const PoissonElement& x);
  /// Commutative product: exponents add.
  friend PoissonElement operator*(const PoissonElement& x, const PoissonElement& y);
  friend bool operator==(const PoissonElement& a, const PoissonElement& b) = default;

 private:
  Terms terms_;
};

/// Every coefficient lies in Q[v, v^-1].
bool in_integral_form(const AlgebraElement& x);
/// Coefficientwise v -> 1; throws NotIntegral.
PoissonElement specialize(const AlgebraElement& x);
/// Canonical lift: the same monomials with constant coefficients.
AlgebraElement lift(const PoissonElement& p);

/// {a, b} = specialization of (ab - ba) / (2(v - 1)), memoized per monomial
/// pair. Throws NotDivisible when a commutator is not divisible by v - 1.
class PoissonStructure {
 public:
  explicit PoissonStructure(const QuantumAlgebra& U) : U_(U) {}

  const QuantumAlgebra& algebra() const { return U_; }
  PoissonElement bracket(const PoissonElement& a, const PoissonElement& b) const;
  PoissonElement bracket(const PBWMonomial& a, const PBWMonomial& b) const;

 private:
  const QuantumAlgebra& U_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<PBWMonomial, PBWMonomial>, PoissonElement> cache_;
};

/// Divides the commutator coefficients by 2(v - 1) and specializes.
PoissonElement semiclassical_limit(const AlgebraElement& commutator);

PoissonElement poisson_bracket(const QuantumAlgebra& U, const PoissonElement& a, const PoissonElement& b);

}  // namespace qsp
