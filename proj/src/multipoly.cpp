#include "apolar/multipoly.hpp"

#include <algorithm>

namespace apolar {

namespace {

void check_same_ring(const MultiPoly& p, const MultiPoly& q) {
  if (p.n_vars() != q.n_vars())
    throw InvalidInput("variable counts differ: " + std::to_string(p.n_vars()) + " vs " +
                       std::to_string(q.n_vars()));
}

}  // namespace

MultiPoly MultiPoly::monomial(Exponents e, Rational c) {
  MultiPoly p(static_cast<int>(e.size()));
  for (int k : e)
    if (k < 0) throw InvalidInput("negative exponent");
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int n_vars, int i) {
  if (i < 0 || i >= n_vars) throw InvalidInput("variable index out of range");
  Exponents e(n_vars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::constant(int n_vars, Rational c) {
  MultiPoly p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial is undefined");
  return degree_of(terms_.begin()->first);  // leading term has maximal degree
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  return degree_of(terms_.rbegin()->first) == d;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(n_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_vars_)
    throw InvalidInput("exponent tuple length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) {
  check_same_ring(p, q);
  MultiPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

MultiPoly sub(const MultiPoly& p, const MultiPoly& q) {
  check_same_ring(p, q);
  MultiPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

MultiPoly neg(const MultiPoly& p) { return scale(-1, p); }

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) {
  check_same_ring(p, q);
  MultiPoly r(p.n_vars());
  Exponents e(p.n_vars());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      for (int i = 0; i < p.n_vars(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly scale(const Rational& c, const MultiPoly& p) {
  MultiPoly r(p.n_vars());
  if (c == 0) return r;
  for (const auto& [e, coeff] : p.terms()) r.add_term(e, c * coeff);
  return r;
}

MultiPoly partial(const MultiPoly& p, int i) {
  if (i < 0 || i >= p.n_vars()) throw InvalidInput("derivative index out of range");
  MultiPoly r(p.n_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * e[i]);
  }
  return r;
}

PolyMatrix::PolyMatrix(int rows, int cols, int n_vars)
    : rows_(rows), cols_(cols), n_vars_(n_vars) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix shape");
  data_.assign(static_cast<size_t>(rows) * cols, MultiPoly(n_vars));
}

PolyMatrix jacobian(std::span<const MultiPoly> f) {
  if (f.empty()) throw InvalidInput("jacobian of an empty list");
  const int n = f.front().n_vars();
  if (static_cast<int>(f.size()) != n)
    throw InvalidInput("jacobian needs exactly as many polynomials as variables");
  PolyMatrix m(n, n, n);
  for (int i = 0; i < n; ++i) {
    if (f[i].n_vars() != n) throw InvalidInput("mixed variable counts in jacobian input");
    for (int j = 0; j < n; ++j) m.at(i, j) = partial(f[i], j);
  }
  return m;
}

MultiPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const int k = m.rows();
  if (k == 0) return MultiPoly::constant(m.n_vars(), 1);
  if (k > 20) throw InvalidInput("determinant restricted to small matrices");

  // Minor expansion over column subsets: after processing r rows, minors[mask]
  // with popcount(mask) == r is the determinant of rows 0..r-1 on the columns
  // in mask. One pass per row, alternating signs by position within the mask.
  std::vector<MultiPoly> minors(std::size_t(1) << k, MultiPoly(m.n_vars()));
  minors[0] = MultiPoly::constant(m.n_vars(), 1);
  for (int r = 0; r < k; ++r) {
    std::vector<MultiPoly> next(std::size_t(1) << k, MultiPoly(m.n_vars()));
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != r || minors[mask].is_zero()) continue;
      for (int j = 0; j < k; ++j) {
        if (mask & (1u << j)) continue;
        const MultiPoly& entry = m.at(r, j);
        if (entry.is_zero()) continue;
        // expanding along row r: sign is (-1)^(r + position of j in mask|j)
        const int pos = __builtin_popcount(mask & ((1u << j) - 1));
        MultiPoly term = mul(entry, minors[mask]);
        if ((r + pos) % 2) term = neg(term);
        next[mask | (1u << j)] = add(next[mask | (1u << j)], term);
      }
    }
    minors = std::move(next);
  }
  return minors[(std::size_t(1) << k) - 1];
}

}  // namespace apolar
