#include <cctype>

#include "evohopf/error.hpp"
#include "evohopf/polynomial.hpp"

namespace evohopf {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool factor_start(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
}

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        skip();
        FieldElement d = number();
        if (d.is_zero()) fail("division by zero");
        acc = acc * d.inv();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 0xffff) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  FieldElement number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return FieldElement::parse(ring_->field(), s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring_, number());
    if (!ident_start(c)) fail("expected a factor");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    // A '*' directly after a name is the star suffix unless a factor follows it.
    if (pos_ < s_.size() && s_[pos_] == '*' && ring_->vars().index_of(name + "*")) {
      std::size_t look = pos_ + 1;
      while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
      if (look >= s_.size() || !factor_start(s_[look])) {
        name += '*';
        ++pos_;
      }
    }
    auto idx = ring_->vars().index_of(name);
    if (!idx) fail("unknown variable '" + name + "'");
    return Polynomial::variable(ring_, *idx);
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).run();
}

}  // namespace evohopf
