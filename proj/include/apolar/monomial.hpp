#pragma once

#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Exponent tuple of a monomial; length = ambient variable count.
using Exponents = std::vector<int>;

inline int degree_of(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

/// Canonical monomial order: by total degree descending, ties broken
/// lexicographically with x0 heaviest. `operator()(a, b)` is true when a
/// precedes b, so iterating a map keyed with this order visits terms in
/// canonical print order (leading term first).
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, x0 first
  }
};

/// All degree-d exponent tuples on n_vars variables, in canonical order.
/// Size is binom(n_vars - 1 + d, d).
std::vector<Exponents> monomials(int n_vars, int d);

BigInt binomial(int n, int k);

/// dim of the degree-d slice of the polynomial ring on n_vars variables.
long long monomial_count(int n_vars, int d);

}  // namespace apolar
