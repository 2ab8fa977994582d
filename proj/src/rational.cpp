#include "apolar/rational.hpp"

#include <cctype>

#include "apolar/errors.hpp"

namespace apolar {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> BigInt {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", pos);
    BigInt v(std::string(text.substr(start, pos - start)));
    return negative ? BigInt(-v) : v;
  };

  BigInt num = read_int();
  BigInt den = 1;
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace apolar
