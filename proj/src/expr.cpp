#include "qsp/expr.hpp"

#include <cctype>

#include "qsp/error.hpp"

namespace qsp {

namespace {

class Parser {
 public:
  Parser(const QuantumAlgebra& U, std::string_view text) : U_(U), s_(text) {}

  AlgebraElement run() {
    AlgebraElement x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long number() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  AlgebraElement expr() {
    AlgebraElement x = term();
    while (true) {
      if (eat('+')) x += term();
      else if (eat('-')) x -= term();
      else return x;
    }
  }

  AlgebraElement term() {
    AlgebraElement x = unary();
    while (eat('*')) x = U_.multiply(x, unary());
    return x;
  }

  AlgebraElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  AlgebraElement power() {
    AlgebraElement base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    if (!negative) eat('+');
    long n = number();
    if (!negative) return U_.power(base, static_cast<int>(n));
    // Only units can be inverted: c * K_mu.
    if (base.size() != 1) fail("negative power of a non-unit");
    const auto& [m, c] = *base.terms().begin();
    for (int x : m.e)
      if (x != 0) fail("negative power of a non-unit");
    for (int x : m.f)
      if (x != 0) fail("negative power of a non-unit");
    if (!c.num().is_monomial() || !c.den().is_monomial()) fail("negative power of a non-unit");
    AlgebraElement inv = U_.scalar(c.inverse());
    Weight mu = m.k;
    for (int& x : mu) x = -x;
    inv = U_.multiply(inv, U_.k(mu));
    return U_.power(inv, static_cast<int>(n));
  }

  int index(int bound, const char* what) {
    long i = number();
    if (i < 1 || i > bound) fail(std::string(what) + " index " + std::to_string(i) + " out of range");
    return static_cast<int>(i) - 1;
  }

  AlgebraElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r(number());
      if (eat('/')) {
        long d = number();
        if (d == 0) fail("division by zero");
        r /= d;
      }
      return U_.scalar(Fraction(r));
    }
    ++pos_;
    const int rank = U_.root_data().rank();
    const int roots = U_.num_roots();
    switch (c) {
      case 'v': return U_.scalar(Fraction(Laurent::monomial(1)));
      case 'q': return U_.scalar(Fraction(Laurent::monomial(2)));
      case 'E':
      case 'F': {
        if (eat('[')) {
          int k = index(roots, "root");
          if (!eat(']')) fail("expected ']'");
          return c == 'E' ? U_.root_e(k) : U_.root_f(k);
        }
        int i = index(rank, "generator");
        return c == 'E' ? U_.e(i) : U_.f(i);
      }
      case 'K': {
        int i = index(rank, "generator");
        return U_.k(U_.root_data().simple(i));
      }
      default: --pos_; fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  const QuantumAlgebra& U_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(const QuantumAlgebra& U, std::string_view text) { return Parser(U, text).run(); }

}  // namespace qsp
