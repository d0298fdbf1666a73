#include "cork/expr.hpp"

#include "cork/error.hpp"

#include <cctype>

namespace cork::expr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& b) : text_(text), bindings_(b) {}

  Rational run() {
    Rational v = disjunction();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("expression: " + what, 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  static Rational truth(bool b) { return b ? 1 : 0; }

  Rational disjunction() {
    Rational v = conjunction();
    while (eat("||")) {
      const Rational r = conjunction();
      v = truth(v != 0 || r != 0);
    }
    return v;
  }

  Rational conjunction() {
    Rational v = comparison();
    while (eat("&&")) {
      const Rational r = comparison();
      v = truth(v != 0 && r != 0);
    }
    return v;
  }

  Rational comparison() {
    const Rational l = sum();
    if (eat("==")) return truth(l == sum());
    if (eat("!=")) return truth(l != sum());
    if (eat("<=")) return truth(l <= sum());
    if (eat(">=")) return truth(l >= sum());
    if (eat("<")) return truth(l < sum());
    if (eat(">")) return truth(l > sum());
    return l;
  }

  Rational sum() {
    Rational v = product();
    while (true) {
      if (eat("+"))
        v += product();
      else if (eat("-"))
        v -= product();
      else
        return v;
    }
  }

  Rational product() {
    Rational v = unary();
    while (true) {
      if (eat("*")) {
        v *= unary();
      } else if (eat("/")) {
        const Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    if (eat("-")) return -unary();
    return atom();
  }

  Rational atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (eat("(")) {
      Rational v = disjunction();
      if (!eat(")")) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.'))
        ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (name == "abs") {
        if (!eat("(")) fail("abs needs '('");
        Rational v = disjunction();
        if (!eat(")")) fail("missing ')'");
        return v < 0 ? Rational(-v) : v;
      }
      auto it = bindings_.find(name);
      if (it == bindings_.end()) fail("unbound name '" + std::string(name) + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate(std::string_view text, const Bindings& bindings) { return Parser(text, bindings).run(); }

bool holds(std::string_view text, const Bindings& bindings) { return evaluate(text, bindings) != 0; }

}  // namespace cork::expr
