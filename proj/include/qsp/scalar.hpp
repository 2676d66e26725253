#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qsp {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Exact Laurent polynomial in v = q^{1/2} with rational coefficients.
///
/// Stored as a sparse map exponent -> coefficient; zero coefficients are never
/// stored, so two values are equal iff their maps are equal.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(int exponent, const Rational& coeff = 1);
  /// v^{2k} - v^{-2k}, i.e. q^k - q^{-k}.
  static Laurent q_diff(int k);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True for c * v^k with c != 0.
  bool is_monomial() const { return coeffs_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int exponent) const;

  Rational eval_at_one() const;
  double eval(double v) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& c);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  /// Multiplies by v^k.
  Laurent shifted(int k) const;

  std::string to_string() const;
  static Laurent parse(std::string_view text);

 private:
  std::map<int, Rational> coeffs_;
};

/// c with c*b == a, or nullopt when b does not divide a in Q[v, v^-1].
std::optional<Laurent> try_exact_quotient(const Laurent& a, const Laurent& b);
/// As above but raises Error(NotDivisible).
Laurent exact_quotient(const Laurent& a, const Laurent& b);
/// Monic greatest common divisor, normalised to a polynomial with nonzero
/// constant term (units v^k are stripped).
Laurent gcd(const Laurent& a, const Laurent& b);

/// Element of Q(v) kept as num/den with den a monic polynomial in v having
/// nonzero constant term and gcd(num, den) = 1. Integral iff den == 1.
class Fraction {
 public:
  Fraction() : den_(1) {}
  Fraction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Fraction(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Fraction(const Laurent& num, const Laurent& den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_integral() const { return den_.is_one(); }

  /// Value at v = 1; defined whenever the denominator does not vanish there.
  Rational value_at_one() const;
  bool regular_at_one() const;

  Fraction operator-() const;
  Fraction inverse() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  friend bool operator==(const Fraction& a, const Fraction& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  Laurent num_;
  Laurent den_;
};

/// q^k as a scalar (v^{2k}).
inline Laurent q_pow(int k) { return Laurent::monomial(2 * k); }

}  // namespace qsp
