#include "qsp/scalar.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

#include "qsp/error.hpp"

namespace qsp {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// Dense polynomial helpers, coefficients low -> high, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = v^shift * poly with poly(0) != 0.
std::pair<int, Poly> split(const Laurent& a) {
  if (a.is_zero()) return {0, {}};
  const int lo = a.min_exponent();
  Poly p(static_cast<size_t>(a.max_exponent() - lo + 1));
  for (const auto& [e, c] : a.coeffs()) p[static_cast<size_t>(e - lo)] = c;
  return {lo, std::move(p)};
}

Laurent join(int shift, const Poly& p) {
  Laurent out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += Laurent::monomial(shift + static_cast<int>(i), p[i]);
  return out;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const size_t d = a.size() - b.size();
    Rational f = a.back() / lead;
    q[d] = f;
    for (size_t i = 0; i < b.size(); ++i) a[d + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

}  // namespace

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(long c) {
  if (c != 0) coeffs_.emplace(0, Rational(c));
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) coeffs_.emplace(0, c);
}

Laurent Laurent::monomial(int exponent, const Rational& coeff) {
  Laurent out;
  if (coeff != 0) out.coeffs_.emplace(exponent, coeff);
  return out;
}

Laurent Laurent::q_diff(int k) { return monomial(2 * k) - monomial(-2 * k); }

bool Laurent::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

int Laurent::min_exponent() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int Laurent::max_exponent() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Rational Laurent::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Laurent::eval_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

double Laurent::eval(double v) const {
  double s = 0;
  for (const auto& [e, c] : coeffs_) s += c.get_d() * std::pow(v, e);
  return s;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      auto [it, inserted] = out.coeffs_.try_emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& [e, x] : coeffs_) x *= c;
  }
  return *this;
}

Laurent Laurent::shifted(int k) const {
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + k, c);
  return out;
}

std::string Laurent::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class ScalarReader {
 public:
  explicit ScalarReader(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::ParseError,
                "scalar '" + std::string(s_) + "': " + msg + " at offset " +
                    std::to_string(pos_));
  }
  std::string digits() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  int signed_int() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    int x = std::stoi(digits());
    return neg ? -x : x;
  }

  Laurent term() {
    Rational coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational num(digits());
      if (accept('/')) num /= Rational(digits());
      coeff = num;
      have_number = true;
      if (!accept('*')) return Laurent(coeff);
    }
    if (accept('v')) {
      int e = 1;
      if (accept('^')) e = signed_int();
      return Laurent::monomial(e, coeff);
    }
    if (!have_number) fail("expected a term");
    fail("expected 'v' after '*'");
  }

  Laurent sum() {
    Laurent out;
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (accept('+')) sign = 1;
      else if (!first) fail("expected '+' or '-'");
      Laurent t = term();
      if (sign < 0) t = -t;
      out += t;
      first = false;
    }
    if (first) fail("empty scalar");
    return out;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) { return ScalarReader(text).sum(); }

std::optional<Laurent> try_exact_quotient(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent();
  auto [sa, pa] = split(a);
  auto [sb, pb] = split(b);
  auto [q, r] = divmod(std::move(pa), pb);
  if (!r.empty()) return std::nullopt;
  return join(sa - sb, q);
}

Laurent exact_quotient(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero scalar");
  auto q = try_exact_quotient(a, b);
  if (!q) {
    throw Error(ErrorKind::NotDivisible,
                "(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return *q;
}

Laurent gcd(const Laurent& a, const Laurent& b) {
  return join(0, poly_gcd(split(a).second, split(b).second));
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  normalize();
}

void Fraction::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = *den_.coeffs().begin();
    num_ = num_.shifted(-e);
    num_ *= Rational(1 / c);
    den_ = Laurent(1);
    return;
  }
  auto [sn, pn] = split(num_);
  auto [sd, pd] = split(den_);
  Poly g = poly_gcd(pn, pd);
  if (g.size() > 1) {
    pn = divmod(std::move(pn), g).first;
    pd = divmod(std::move(pd), g).first;
  }
  Rational lead = pd.back();
  for (auto& c : pn) c /= lead;
  for (auto& c : pd) c /= lead;
  num_ = join(sn - sd, pn);
  den_ = join(0, pd);
}

bool Fraction::regular_at_one() const { return den_.eval_at_one() != 0; }

Rational Fraction::value_at_one() const {
  Rational d = den_.eval_at_one();
  if (d == 0) {
    throw Error(ErrorKind::NotIntegral,
                "scalar " + to_string() + " has a pole at v = 1");
  }
  return num_.eval_at_one() / d;
}

Fraction Fraction::operator-() const {
  Fraction out = *this;
  out.num_ = -out.num_;
  return out;
}

Fraction Fraction::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return Fraction(den_, num_);
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) { return *this *= o.inverse(); }

std::string Fraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qsp
