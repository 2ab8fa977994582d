#include "apolar/linalg.hpp"

#include <algorithm>

#include "apolar/errors.hpp"

namespace apolar {

RatRowVec RowSpace::reduce(RatRowVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v(pivots_[k]);
    if (c != 0) v -= c * rows_[k];  // basis rows are monic at their pivot
  }
  return v;
}

bool RowSpace::insert(const RatRowVec& v) {
  if (v.cols() != cols_) throw InvalidInput("row length does not match space");
  RatRowVec r = reduce(v);
  Index p = -1;
  for (Index j = 0; j < cols_; ++j) {
    if (r(j) != 0) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  r /= r(p);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k](p);
    if (c != 0) rows_[k] -= c * r;
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t where = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + where, std::move(r));
  return true;
}

bool RowSpace::contains(const RatRowVec& v) const {
  RatRowVec r = reduce(v);
  for (Index j = 0; j < r.cols(); ++j)
    if (r(j) != 0) return false;
  return true;
}

bool RowSpace::contains(const RowSpace& other) const {
  if (other.cols() != cols_) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

RatMat RowSpace::basis_matrix() const {
  RatMat m(dim(), cols_);
  for (Index i = 0; i < dim(); ++i) m.row(i) = rows_[static_cast<std::size_t>(i)];
  return m;
}

bool RowSpace::operator==(const RowSpace& o) const {
  if (cols_ != o.cols_ || pivots_ != o.pivots_) return false;
  // RREF is unique per subspace, so entrywise equality decides
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (Index j = 0; j < cols_; ++j)
      if (rows_[k](j) != o.rows_[k](j)) return false;
  return true;
}

RatMat transposed(const RatMat& m) {
  RatMat t(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Index rref_in_place(RatMat& m, std::vector<Index>* pivots) {
  if (pivots) pivots->clear();
  Index rank = 0;
  for (Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Index piv = -1;
    for (Index i = rank; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    m.row(rank) /= m(rank, col);
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const Rational& f = m(i, col);
      if (f != 0) m.row(i) -= f * m.row(rank);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

RatMat kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<Index> pivots;
  const Index rank = rref_in_place(r, &pivots);
  const Index n = m.cols();
  const Index nullity = n - rank;
  RatMat kernel(nullity, n);
  kernel.setConstant(Rational(0));

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Index row = 0;
  for (Index freecol = 0; freecol < n; ++freecol) {
    if (is_pivot[static_cast<std::size_t>(freecol)]) continue;
    kernel(row, freecol) = 1;
    for (Index k = 0; k < rank; ++k) kernel(row, pivots[static_cast<std::size_t>(k)]) = -r(k, freecol);
    ++row;
  }

  // Canonicalize: the free-column construction need not have leftmost pivots.
  RowSpace space(n);
  for (Index i = 0; i < nullity; ++i) space.insert(kernel.row(i));
  if (space.dim() != nullity) throw InternalError("kernel basis lost rank");
  return space.basis_matrix();
}

namespace {

// Row-wise denominator clearing and content stripping; both preserve rank.
std::vector<std::vector<BigInt>> integerize(const RatMat& m) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt lcm_den = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      BigInt den = denominator(m(i, j));
      lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    std::vector<BigInt> row(static_cast<std::size_t>(m.cols()));
    BigInt content = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      BigInt v = numerator(m(i, j)) * (lcm_den / denominator(m(i, j)));
      row[static_cast<std::size_t>(j)] = v;
      content = boost::multiprecision::gcd(content, v);
    }
    if (content > 1)
      for (auto& v : row) v /= content;
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  return rows;
}

}  // namespace

Index rank_exact(const RatMat& m) {
  auto a = integerize(m);
  const Index rows = m.rows(), cols = m.cols();
  Index rank = 0;
  BigInt prev_pivot = 1;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    const BigInt pivot = prow[static_cast<std::size_t>(col)];
    for (Index i = rank + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const BigInt f = row[static_cast<std::size_t>(col)];
      if (f == 0 && pivot == prev_pivot) continue;  // row unchanged up to exact division
      for (Index j = col; j < cols; ++j) {
        // Bareiss: exact division by the previous pivot keeps entries as minors
        row[static_cast<std::size_t>(j)] =
            (pivot * row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)]) /
            prev_pivot;
      }
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::optional<Index> rank_mod_p(const RatMat& m, std::uint64_t p) {
  const auto P = static_cast<long long>(p);
  auto mod_inverse = [&](long long a) {
    // Fermat: p prime
    long long result = 1, base = a % P, e = P - 2;
    while (e > 0) {
      if (e & 1) result = (__int128)result * base % P;
      base = (__int128)base * base % P;
      e >>= 1;
    }
    return result;
  };
  auto to_mod = [&](const Rational& q) -> std::optional<long long> {
    long long num = (numerator(q) % P).convert_to<long long>();
    long long den = (denominator(q) % P).convert_to<long long>();
    if (den == 0) return std::nullopt;
    if (num < 0) num += P;
    return (__int128)num * mod_inverse(den) % P;
  };

  const Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(rows),
                                        std::vector<long long>(static_cast<std::size_t>(cols)));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      auto v = to_mod(m(i, j));
      if (!v) return std::nullopt;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *v;
    }

  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const long long inv = mod_inverse(prow[static_cast<std::size_t>(col)]);
    for (Index j = col; j < cols; ++j)
      prow[static_cast<std::size_t>(j)] = (__int128)prow[static_cast<std::size_t>(j)] * inv % P;
    for (Index i = rank + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const long long f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (Index j = col; j < cols; ++j) {
        row[static_cast<std::size_t>(j)] =
            (row[static_cast<std::size_t>(j)] - (__int128)f * prow[static_cast<std::size_t>(j)] % P + P) % P;
      }
    }
    ++rank;
  }
  return rank;
}

Index rank_with_modular_shortcut(const RatMat& m) {
  constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1
  const Index full = std::min(m.rows(), m.cols());
  if (auto r = rank_mod_p(m, kPrime); r && *r == full) return full;
  return rank_exact(m);
}

}  // namespace apolar
