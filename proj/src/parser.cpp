#include "locmult/parser.hpp"

#include <cctype>
#include <string>

#include "locmult/errors.hpp"

namespace locmult {

namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  // Unary minus applies to a whole factor, so "-x^2" reads as -(x^2).
  Polynomial factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      return b.pow(exponent());
    }
    return b;
  }

  unsigned exponent() {
    const char c = peek();
    if (c == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected exponent", pos_);
    const std::size_t begin = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > kMaxExponent) throw ParseError("exponent too large", begin);
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      throw ParseError("non-integer exponent", begin);
    }
    return static_cast<unsigned>(value);
  }

  std::string digits() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  Polynomial base() {
    const char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '(') {
      const std::size_t open = pos_++;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError("missing ')' for '(' at " + std::to_string(open), pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      mpz_class num(digits());
      mpz_class den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected denominator", pos_);
        }
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", begin);
      }
      Rational value(num, den);
      value.canonicalize();
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(begin, pos_ - begin);
      const auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", begin);
      return Polynomial::variable(ring_, *index);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace locmult
