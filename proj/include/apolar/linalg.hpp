#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "apolar/rational.hpp"

namespace apolar {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatRowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// A subspace of Q^cols kept in reduced row echelon form at all times, with
/// pivots at the leftmost possible columns. The RREF of a span is unique, so
/// rows() is a canonical representation independent of insertion order.
class RowSpace {
 public:
  explicit RowSpace(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }

  /// Remainder of v after full reduction against the basis.
  RatRowVec reduce(RatRowVec v) const;

  /// Insert v's residue; returns true if the dimension grew.
  bool insert(const RatRowVec& v);

  bool contains(const RatRowVec& v) const;
  bool contains(const RowSpace& other) const;

  /// Basis rows sorted by pivot column, each monic, dim() x cols().
  RatMat basis_matrix() const;
  const std::vector<Index>& pivots() const { return pivots_; }

  bool operator==(const RowSpace& o) const;

 private:
  Index cols_;
  std::vector<RatRowVec> rows_;  // sorted by pivot column
  std::vector<Index> pivots_;
};

/// Materialized transpose. Constructing a Matrix directly from a Transpose
/// expression trips a non-SFINAE-friendly trait in the multiprecision
/// backend, so the loop is spelled out once here.
RatMat transposed(const RatMat& m);

/// In-place Gauss-Jordan over Q, pivoting on the leftmost nonzero column.
/// Returns the rank; pivot column indices go to *pivots when given.
Index rref_in_place(RatMat& m, std::vector<Index>* pivots = nullptr);

/// RREF basis of { v : m v = 0 }, one basis vector per row.
RatMat kernel_basis(const RatMat& m);

/// Exact rank by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Index rank_exact(const RatMat& m);

/// Rank of m reduced mod p; nullopt when some denominator vanishes mod p.
/// Always a lower bound for the rational rank.
std::optional<Index> rank_mod_p(const RatMat& m, std::uint64_t p);

/// Exact rank with a modular shortcut: a full rank mod p certifies full
/// rational rank; anything less falls back to rank_exact.
Index rank_with_modular_shortcut(const RatMat& m);

}  // namespace apolar
