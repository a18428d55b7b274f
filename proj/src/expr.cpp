#include "skewo/expr.hpp"

#include <cctype>
#include <string>

namespace skewo {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const GammaSpec& gamma) : s_(text), gamma_(gamma) {}

  AlgebraElement run() {
    AlgebraElement a = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character", "operator or end of input");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const std::string& expected, std::size_t at) const {
    throw ParseError("expression: " + what + " at position " + std::to_string(at) + " (expected " + expected + ")",
                     at, expected);
  }
  [[noreturn]] void fail(const std::string& what, const std::string& expected) const { fail(what, expected, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'" : "unexpected end of input",
                         std::string("'") + c + "'");
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  unsigned long number() {
    skip();
    const auto start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("missing integer", "digits");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  int factor_index(std::size_t at) {
    if (!at_digit()) fail("missing factor index", "digits");
    const auto v = number();
    if (v < 1 || v > static_cast<unsigned long>(gamma_.rank()))
      fail("factor index " + std::to_string(v) + " out of range", "1.." + std::to_string(gamma_.rank()), at);
    return static_cast<int>(v) - 1;
  }

  AlgebraElement sum() {
    AlgebraElement a = product();
    while (true) {
      if (accept('+')) a += product();
      else if (accept('-')) a -= product();
      else return a;
    }
  }

  AlgebraElement product() {
    AlgebraElement a = unary();
    while (accept('*')) a = a * unary();
    return a;
  }

  AlgebraElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  AlgebraElement power() {
    AlgebraElement base = atom();
    while (accept('^')) {
      skip();
      if (!at_digit()) fail("exponent must be a nonnegative integer", "digits");
      base = base.pow(static_cast<unsigned>(number()));
    }
    return base;
  }

  AlgebraElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", "atom");
    const std::size_t start = pos_;
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      AlgebraElement a = sum();
      expect(')');
      return a;
    }
    if (ch == '[') {
      ++pos_;
      AlgebraElement a = sum();
      expect(',');
      AlgebraElement b = sum();
      expect(']');
      return commutator(a, b);
    }
    if (at_digit()) {
      while (at_digit()) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) fail("malformed rational literal", "digits");
        while (at_digit()) ++pos_;
      }
      const Rational q = parse_rational(s_.substr(start, pos_ - start));
      return AlgebraElement::scalar(gamma_, Poly(q));
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail(std::string("unexpected '") + ch + "'", "atom");
    std::size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    const std::string word(s_.substr(pos_, end - pos_));
    pos_ = end;
    if (word == "e" || word == "f" || word == "h") {
      const int i = factor_index(start);
      if (word == "e") return AlgebraElement::e(gamma_, i);
      if (word == "f") return AlgebraElement::f(gamma_, i);
      return AlgebraElement::h(gamma_, i);
    }
    if (word == "c" || word == "d" || word == "u" || word == "v")
      return AlgebraElement::scalar(gamma_, Poly::var(word));
    if (word == "t") {
      if (!at_digit()) fail("parameter t needs an index", "digits");
      return AlgebraElement::scalar(gamma_, Poly::var("t" + std::to_string(number())));
    }
    if (word == "s") {
      expect('(');
      const std::size_t at = pos_;
      skip();
      const int i = factor_index(at);
      expect(',');
      skip();
      const int j = factor_index(at);
      expect(')');
      if (i == j) fail("s(i,j) needs i != j", "distinct indices", at);
      return group_atom(Permutation::transposition(gamma_.rank(), i, j), start);
    }
    if (word == "cyc") {
      expect('(');
      const std::size_t at = pos_;
      skip();
      const int i = factor_index(at);
      skip();
      if (!(accept('.') && accept('.'))) fail("malformed cycle", "'..'");
      skip();
      const int j = factor_index(at);
      expect(')');
      if (i >= j) fail("cyc(i..j) needs i < j", "i < j", at);
      return group_atom(Permutation::cycle(gamma_.rank(), i, j), start);
    }
    fail("unknown identifier '" + word + "'", "e<i>, f<i>, h<i>, c, d, u, v, t<k>, s(i,j) or cyc(i..j)", start);
  }

  AlgebraElement group_atom(const Permutation& g, std::size_t at) {
    if (!gamma_.contains(g))
      fail("group element " + g.to_cycle_string() + " is not in Gamma = " + gamma_.to_string(), "element of Gamma",
           at);
    return AlgebraElement::group(gamma_, g);
  }

  std::string_view s_;
  const GammaSpec& gamma_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_algebra_expr(std::string_view text, const GammaSpec& gamma) {
  return ExprParser(text, gamma).run();
}

}  // namespace skewo
