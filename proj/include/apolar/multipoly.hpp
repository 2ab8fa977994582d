#pragma once

#include <map>
#include <span>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Sparse multivariate polynomial over Rational with a fixed ambient variable
/// count. Terms are stored in canonical monomial order and never with a zero
/// coefficient, so two polynomials are equal iff their term maps are equal.
/// Values are immutable in spirit: every operation returns a fresh value.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  explicit MultiPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw InvalidInput("variable count must be at least 1");
  }

  static MultiPoly monomial(Exponents e, Rational c = 1);
  static MultiPoly variable(int n_vars, int i);
  static MultiPoly constant(int n_vars, Rational c);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Throws InvalidInput on the zero polynomial (degree undefined).
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Coefficient of the degree-0 term (the whole value for constants).
  Rational constant_term() const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;

  /// Accumulate c * x^e, dropping the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  bool operator==(const MultiPoly& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

 private:
  int n_vars_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly neg(const MultiPoly& p);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly scale(const Rational& c, const MultiPoly& p);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return sub(p, q); }
inline MultiPoly operator-(const MultiPoly& p) { return neg(p); }
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return mul(p, q); }
inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return scale(c, p); }

/// Formal partial derivative with respect to variable i.
MultiPoly partial(const MultiPoly& p, int i);

/// Rectangular grid of polynomials sharing one ambient variable count.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int n_vars);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n_vars() const { return n_vars_; }
  MultiPoly& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const MultiPoly& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_, n_vars_;
  std::vector<MultiPoly> data_;
};

/// Jacobian of n+1 polynomials in n+1 variables; entry (i,j) = d f_i / d x_j.
PolyMatrix jacobian(std::span<const MultiPoly> f);

/// Exact determinant by fraction-free minor expansion memoized over column
/// subsets. Matrices here stay small (Jacobians of a handful of forms).
MultiPoly det(const PolyMatrix& m);

}  // namespace apolar
