#include "apolar/parse.hpp"

#include <cctype>
#include <map>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

// One-pass recursive-descent parser producing index->exponent maps, so the
// ambient variable count can be decided afterwards.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  using SparseExps = std::map<int, int>;
  struct Term {
    Rational coeff;
    SparseExps exps;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    bool negative = accept('-');
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!eof()) {
      char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(parse_term(op == '-'));
      skip_ws();
    }
    return terms;
  }

  int max_index() const { return max_index_; }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long parse_uint(const char* what) {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 9) throw ParseError(std::string(what) + " too large", start);
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  BigInt parse_bigint() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digits", pos_);
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  // factor := 'x' index ['^' exp]
  void parse_factor(SparseExps& exps) {
    skip_ws();
    if (eof() || peek() != 'x') throw ParseError("expected variable", pos_);
    ++pos_;
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected variable index", pos_);
    int idx = static_cast<int>(parse_uint("variable index"));
    int exp = 1;
    if (accept('^')) exp = static_cast<int>(parse_uint("exponent"));
    if (idx > max_index_) max_index_ = idx;
    exps[idx] += exp;
  }

  // term := coeff ['*' mono] | mono
  Term parse_term(bool negative) {
    skip_ws();
    if (eof()) throw ParseError("expected term", pos_);
    Term t{Rational(1), {}};
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_bigint();
      BigInt den = 1;
      if (accept('/')) {
        std::size_t dpos = pos_;
        den = parse_bigint();
        if (den == 0) throw ParseError("zero denominator", dpos);
      }
      t.coeff = Rational(num) / Rational(den);
      saw_coeff = true;
    }
    if (saw_coeff) {
      std::size_t save = pos_;
      if (accept('*')) {
        parse_factor(t.exps);
      } else {
        pos_ = save;
      }
    } else {
      parse_factor(t.exps);
    }
    // remaining '*' factors
    while (accept('*')) parse_factor(t.exps);
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = -1;
};

MultiPoly assemble(const std::vector<Parser::Term>& terms, int n_vars) {
  MultiPoly p(n_vars);
  for (const auto& t : terms) {
    Exponents e(n_vars, 0);
    for (const auto& [idx, exp] : t.exps) {
      if (idx >= n_vars)
        throw ParseError("variable index " + std::to_string(idx) +
                             " exceeds variable count " + std::to_string(n_vars),
                         0);
      e[idx] = exp;
    }
    p.add_term(e, t.coeff);
  }
  return p;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, int n_vars) {
  Parser parser(text);
  auto terms = parser.parse();
  return assemble(terms, n_vars);
}

MultiPoly parse_poly(std::string_view text) {
  Parser parser(text);
  auto terms = parser.parse();
  return assemble(terms, std::max(parser.max_index() + 1, 1));
}

int max_variable_index(std::string_view text) {
  Parser parser(text);
  parser.parse();
  return parser.max_index();
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    Rational abs_c = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += format_rational(abs_c);
    } else if (abs_c == 1) {
      out += mono;
    } else {
      out += format_rational(abs_c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace apolar
