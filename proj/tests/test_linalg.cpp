#include <doctest.h>

#include "apolar/linalg.hpp"
#include "oracle_support.hpp"

using namespace apolar;

namespace {

RatMat random_matrix(std::mt19937_64& rng, Index rows, Index cols, double density = 0.6) {
  RatMat m(rows, cols);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = keep(rng) < density ? oracle::random_rational(rng) : Rational(0);
  return m;
}

int oracle_rank(const RatMat& m) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return oracle::naive_span_dim(std::move(rows));
}

}  // namespace

TEST_CASE("row space keeps a reduced echelon basis") {
  RowSpace space(4);
  RatRowVec v(4);
  v << Rational(2), Rational(4), Rational(0), Rational(2);
  CHECK(space.insert(v));
  v << Rational(1), Rational(2), Rational(0), Rational(1);
  CHECK_FALSE(space.insert(v));  // dependent
  v << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(space.insert(v));
  CHECK(space.dim() == 2);

  RatMat basis = space.basis_matrix();
  // monic pivots, pivot columns cleared elsewhere
  CHECK(basis(0, 0) == 1);
  CHECK(basis(1, 1) == 1);
  CHECK(basis(0, 1) == 0);
  CHECK(space.pivots() == std::vector<Index>{0, 1});
}

TEST_CASE("row space RREF is insertion-order independent") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 20; ++iter) {
    RatMat m = random_matrix(rng, 6, 5);
    RowSpace forward(5), backward(5);
    for (Index i = 0; i < 6; ++i) forward.insert(m.row(i));
    for (Index i = 5; i >= 0; --i) backward.insert(m.row(i));
    CHECK(forward == backward);
  }
}

TEST_CASE("containment and reduction") {
  RowSpace space(3);
  RatRowVec a(3), b(3);
  a << Rational(1), Rational(1), Rational(0);
  b << Rational(0), Rational(0), Rational(1);
  space.insert(a);
  space.insert(b);
  RatRowVec probe(3);
  probe << Rational(3), Rational(3), Rational(-2);
  CHECK(space.contains(probe));
  probe << Rational(1), Rational(0), Rational(0);
  CHECK_FALSE(space.contains(probe));
}

TEST_CASE("rref pivots are leftmost and ranks agree with the oracle") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 25; ++iter) {
    RatMat m = random_matrix(rng, 5, 7, 0.5);
    RatMat r = m;
    std::vector<Index> pivots;
    Index rank = rref_in_place(r, &pivots);
    CHECK(rank == oracle_rank(m));
    // pivot structure: monic, strictly increasing, cleared columns
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      CHECK(r(static_cast<Index>(k), pivots[k]) == 1);
      if (k > 0) CHECK(pivots[k] > pivots[k - 1]);
      for (Index i = 0; i < rank; ++i)
        if (i != static_cast<Index>(k)) CHECK(r(i, pivots[k]) == 0);
    }
  }
}

TEST_CASE("kernel basis really spans the kernel") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 25; ++iter) {
    RatMat m = random_matrix(rng, 4, 6, 0.5);
    RatMat k = kernel_basis(m);
    CHECK(k.rows() == 6 - oracle_rank(m));
    for (Index i = 0; i < k.rows(); ++i) {
      for (Index r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (Index j = 0; j < m.cols(); ++j) dot += m(r, j) * k(i, j);
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 30; ++iter) {
    RatMat m = random_matrix(rng, 3 + static_cast<Index>(rng() % 5),
                             3 + static_cast<Index>(rng() % 5), 0.55);
    Index expected = oracle_rank(m);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_with_modular_shortcut(m) == expected);
    auto modular = rank_mod_p(m, 2147483647ULL);
    if (modular) CHECK(*modular <= expected);
  }
}

TEST_CASE("rank of structured rank-deficient matrices") {
  // u v^T has rank exactly 1
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 10; ++iter) {
    RatMat m(4, 5);
    std::vector<Rational> u(4), v(5);
    for (auto& x : u) x = oracle::random_rational(rng);
    for (auto& x : v) x = oracle::random_rational(rng);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 5; ++j) m(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    bool nonzero = false;
    for (Index i = 0; i < 4 && !nonzero; ++i)
      for (Index j = 0; j < 5 && !nonzero; ++j) nonzero = m(i, j) != 0;
    if (nonzero) {
      CHECK(rank_exact(m) == 1);
      CHECK(rank_with_modular_shortcut(m) == 1);
    }
  }
}

TEST_CASE("transposed materializes the transpose") {
  std::mt19937_64 rng(61);
  RatMat m = random_matrix(rng, 3, 5);
  RatMat t = transposed(m);
  REQUIRE(t.rows() == 5);
  REQUIRE(t.cols() == 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 5; ++j) CHECK(t(j, i) == m(i, j));
}

TEST_CASE("modular rank skips primes dividing a denominator") {
  RatMat m(1, 1);
  m(0, 0) = Rational(1) / Rational(2147483647LL);
  CHECK_FALSE(rank_mod_p(m, 2147483647ULL).has_value());
  CHECK(rank_exact(m) == 1);
  CHECK(rank_with_modular_shortcut(m) == 1);
}

TEST_CASE("huge intermediate values stay exact") {
  // Hilbert-like matrices are notorious for precision loss; exact arithmetic
  // must see full rank
  RatMat m(6, 6);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) m(i, j) = Rational(1) / Rational(i + j + 1);
  CHECK(rank_exact(m) == 6);
  RatMat r = m;
  CHECK(rref_in_place(r) == 6);
}
