#include "microformal/io.hpp"

#include <cctype>

namespace mf {

std::string toText(const SuperPoly& p) {
  if (p.isZero()) return "0";
  const Scope& sc = *p.scope();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    bool needCoeff = a != 1 || m.empty();
    if (needCoeff) out += toString(a);
    bool sep = needCoeff;
    for (const auto& [v, e] : m.factors) {
      if (sep) out += "*";
      out += sc.name(v);
      if (e > 1) out += "^" + std::to_string(e);
      sep = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const ScopePtr& scope, std::string_view text, const VarNames& names)
      : scope_(scope), text_(text), names_(names) {}

  SuperPoly parse() {
    SuperPoly p = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  SuperPoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    SuperPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  SuperPoly term() {
    SuperPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  SuperPoly factor() {
    SuperPoly base = primary();
    if (eat('^')) {
      skipSpace();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  SuperPoly primary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  SuperPoly number() {
    Integer num = digits();
    if (peek() == '/') {
      ++pos_;
      Integer den = digits();
      if (den == 0) fail("zero denominator");
      return SuperPoly::constant(scope_, Rational(num, den));
    }
    return SuperPoly::constant(scope_, Rational(num));
  }

  Integer digits() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  SuperPoly variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    std::string name(text_.substr(start, pos_ - start));
    auto it = names_.find(name);
    if (it == names_.end()) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    return SuperPoly::var(scope_, it->second);
  }

  ScopePtr scope_;
  std::string_view text_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPoly parsePoly(const ScopePtr& scope, std::string_view text,
                    const VarNames& names) {
  return Parser(scope, text, names).parse();
}

}  // namespace mf
