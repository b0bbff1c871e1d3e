#include "locmult/rational.hpp"

#include <cctype>

#include "locmult/errors.hpp"

namespace locmult {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw ParseError("expected integer", i);
  std::string num(text.substr(num_begin, i - num_begin));
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) throw ParseError("expected denominator", i);
    den = std::string(text.substr(den_begin, i - den_begin));
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator", num_begin);
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

}  // namespace locmult
