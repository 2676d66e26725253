#include "qsp/specialization.hpp"

#include "qsp/error.hpp"

namespace qsp {

namespace {

void accumulate(PoissonElement::Terms& t, const PBWMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

const Laurent& two_v_minus_two() {
  static const Laurent d = Laurent::monomial(1, 2) - Laurent(2);
  return d;
}

}  // namespace

PoissonElement PoissonElement::monomial(PBWMonomial m, const Rational& c) {
  PoissonElement p;
  p.add(m, c);
  return p;
}

void PoissonElement::add(const PBWMonomial& m, const Rational& c) { accumulate(terms_, m, c); }

PoissonElement& PoissonElement::operator+=(const PoissonElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PoissonElement& PoissonElement::operator-=(const PoissonElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PoissonElement operator*(const Rational& c, const PoissonElement& x) {
  if (c == 0) return {};
  PoissonElement out = x;
  for (auto& [m, d] : out.terms_) d *= c;
  return out;
}

PoissonElement operator*(const PoissonElement& x, const PoissonElement& y) {
  PoissonElement out;
  for (const auto& [a, c] : x.terms_) {
    for (const auto& [b, d] : y.terms_) {
      PBWMonomial m = a;
      for (size_t k = 0; k < m.e.size(); ++k) m.e[k] += b.e[k];
      for (size_t i = 0; i < m.k.size(); ++i) m.k[i] += b.k[i];
      for (size_t k = 0; k < m.f.size(); ++k) m.f[k] += b.f[k];
      out.add(m, c * d);
    }
  }
  return out;
}

bool in_integral_form(const AlgebraElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!c.is_integral()) return false;
  return true;
}

PoissonElement specialize(const AlgebraElement& x) {
  PoissonElement out;
  for (const auto& [m, c] : x.terms()) {
    if (!c.is_integral()) throw Error(ErrorKind::NotIntegral, "coefficient " + c.to_string() + " is not in Q[v,v^-1]");
    out.add(m, c.num().eval_at_one());
  }
  return out;
}

AlgebraElement lift(const PoissonElement& p) {
  AlgebraElement out;
  for (const auto& [m, c] : p.terms()) out.add(m, Fraction(c));
  return out;
}

PoissonElement semiclassical_limit(const AlgebraElement& commutator) {
  PoissonElement out;
  for (const auto& [m, c] : commutator.terms()) {
    if (!c.is_integral()) throw Error(ErrorKind::NotIntegral, "commutator coefficient " + c.to_string() + " is not integral");
    auto quotient = try_exact_quotient(c.num(), two_v_minus_two());
    if (!quotient)
      throw Error(ErrorKind::NotDivisible, "commutator coefficient " + c.to_string() + " is not divisible by v - 1");
    out.add(m, quotient->eval_at_one());
  }
  return out;
}

PoissonElement PoissonStructure::bracket(const PBWMonomial& a, const PBWMonomial& b) const {
  if (a == b) return {};
  const bool swap = b < a;
  const auto key = swap ? std::make_pair(b, a) : std::make_pair(a, b);
  PoissonElement value;
  bool found = false;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      value = it->second;
      found = true;
    }
  }
  if (!found) {
    auto x = AlgebraElement::monomial(key.first);
    auto y = AlgebraElement::monomial(key.second);
    value = semiclassical_limit(U_.commutator(x, y));
    std::lock_guard lock(mutex_);
    cache_.emplace(key, value);
  }
  return swap ? Rational(-1) * value : value;
}

PoissonElement PoissonStructure::bracket(const PoissonElement& a, const PoissonElement& b) const {
  PoissonElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * bracket(ma, mb);
  return out;
}

PoissonElement poisson_bracket(const QuantumAlgebra& U, const PoissonElement& a, const PoissonElement& b) {
  return semiclassical_limit(U.commutator(lift(a), lift(b)));
}

}  // namespace qsp
