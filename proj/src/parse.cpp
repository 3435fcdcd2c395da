#include "m21/parse.hpp"

#include <cctype>

#include "m21/error.hpp"

namespace m21 {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) die("unexpected trailing input");
    return p;
  }

private:
  std::string_view text_;
  const Ring& ring_;
  size_t pos_ = 0;

  [[noreturn]] void die(const std::string& msg) {
    fail(Errc::ParseError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        die("expected nonnegative integer exponent");
      unsigned long e = number().get_ui();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  mpz_class number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) die("expected number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) die("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t litpos = pos_;
      mpz_class num = number();
      mpq_class value(num);
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          die("expected denominator");
        mpz_class den = number();
        if (den == 0) die("zero denominator");
        value = mpq_class(num, den);
        value.canonicalize();
      }
      if (ring_->domain() == Domain::Integers && value.get_den() != 1)
        fail(Errc::RationalInIntegerRing, "coefficient " + value.get_str() +
                                              " at position " + std::to_string(litpos));
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx)
        fail(Errc::UnknownVariable,
             "'" + name + "' at position " + std::to_string(start) + " (ring " +
                 ring_->str() + ")");
      return Polynomial::variable(ring_, *idx);
    }
    die(pos_ < text_.size() ? std::string("unexpected character '") + c + "'"
                            : std::string("unexpected end of input"));
  }
};

} // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  Parser p(text, ring);
  return p.run();
}

} // namespace m21
