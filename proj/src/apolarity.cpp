#include "apolar/apolarity.hpp"

#include <algorithm>

#include "apolar/regular_sequence.hpp"

namespace apolar {

namespace {

void require_homogeneous_nonzero(const MultiPoly& H, const char* who) {
  if (H.is_zero()) throw InvalidInput(std::string(who) + ": zero polynomial");
  if (!H.is_homogeneous()) throw InvalidInput(std::string(who) + ": inhomogeneous polynomial");
}

Rational falling_factorial(int b, int a) {
  BigInt r = 1;
  for (int k = 0; k < a; ++k) r *= b - k;
  return Rational(r);
}

}  // namespace

MultiPoly contract(const MultiPoly& f, const MultiPoly& g) {
  if (f.n_vars() != g.n_vars())
    throw InvalidInput("contract: operator and operand live in different rings");
  const int n = f.n_vars();
  MultiPoly out(n);
  Exponents e(n);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Rational c = ca * cb;
      bool divides = true;
      for (int i = 0; i < n; ++i) {
        if (a[i] > b[i]) {
          divides = false;
          break;
        }
        e[i] = b[i] - a[i];
        if (a[i] > 0) c *= falling_factorial(b[i], a[i]);
      }
      if (divides) out.add_term(e, c);
    }
  }
  return out;
}

GradedBasis::GradedBasis(int n_vars, int degree)
    : n_vars_(n_vars), degree_(degree), space_(monomial_count(n_vars, degree)) {
  if (degree < 0) throw InvalidInput("negative slice degree");
}

GradedBasis GradedBasis::from_rows(int n_vars, int degree, const RatMat& rows) {
  GradedBasis b(n_vars, degree);
  for (Index i = 0; i < rows.rows(); ++i) b.space_.insert(rows.row(i));
  return b;
}

GradedBasis GradedBasis::from_polys(int n_vars, int degree, std::span<const MultiPoly> polys) {
  GradedBasis b(n_vars, degree);
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    b.space_.insert(poly_coords(p, degree));
  }
  return b;
}

GradedBasis GradedBasis::full_slice(int n_vars, int degree) {
  GradedBasis b(n_vars, degree);
  const Index dim = monomial_count(n_vars, degree);
  RatRowVec unit(dim);
  for (Index i = 0; i < dim; ++i) {
    unit.setConstant(Rational(0));
    unit(i) = 1;
    b.space_.insert(unit);
  }
  return b;
}

std::vector<MultiPoly> GradedBasis::polys() const {
  std::vector<MultiPoly> out;
  RatMat rows = space_.basis_matrix();
  out.reserve(static_cast<std::size_t>(rows.rows()));
  for (Index i = 0; i < rows.rows(); ++i)
    out.push_back(poly_from_coords(n_vars_, degree_, rows.row(i)));
  return out;
}

bool GradedBasis::contains(const MultiPoly& p) const {
  if (p.is_zero()) return true;
  if (p.n_vars() != n_vars_ || !p.is_homogeneous() || p.degree() != degree_) return false;
  return space_.contains(poly_coords(p, degree_));
}

bool GradedBasis::operator==(const GradedBasis& o) const {
  return n_vars_ == o.n_vars_ && degree_ == o.degree_ && space_ == o.space_;
}

RatRowVec poly_coords(const MultiPoly& p, int degree) {
  const auto mons = monomials(p.n_vars(), degree);
  RatRowVec v(static_cast<Index>(mons.size()));
  v.setConstant(Rational(0));
  // terms() and mons share the canonical order, so walk them together
  std::size_t i = 0;
  TermOrder before;
  for (const auto& [e, c] : p.terms()) {
    while (i < mons.size() && before(mons[i], e)) ++i;
    if (i >= mons.size() || mons[i] != e)
      throw InvalidInput("polynomial is not homogeneous of the requested degree");
    v(static_cast<Index>(i)) = c;
  }
  return v;
}

MultiPoly poly_from_coords(int n_vars, int degree, const RatRowVec& v) {
  const auto mons = monomials(n_vars, degree);
  if (static_cast<Index>(mons.size()) != v.cols())
    throw InvalidInput("coordinate length does not match slice dimension");
  MultiPoly p(n_vars);
  for (Index i = 0; i < v.cols(); ++i)
    if (v(i) != 0) p.add_term(mons[static_cast<std::size_t>(i)], v(i));
  return p;
}

RatMat catalecticant(const MultiPoly& H, int d) {
  require_homogeneous_nonzero(H, "catalecticant");
  const int s = H.degree();
  if (d < 0 || d > s) throw InvalidInput("catalecticant degree out of range");
  const auto row_mons = monomials(H.n_vars(), d);
  const Index cols = monomial_count(H.n_vars(), s - d);
  RatMat m(static_cast<Index>(row_mons.size()), cols);
  for (std::size_t r = 0; r < row_mons.size(); ++r) {
    MultiPoly image = contract(MultiPoly::monomial(row_mons[r]), H);
    m.row(static_cast<Index>(r)) =
        image.is_zero() ? RatRowVec::Constant(cols, Rational(0)) : poly_coords(image, s - d);
  }
  return m;
}

GradedBasis annihilator_piece(const MultiPoly& H, int d) {
  require_homogeneous_nonzero(H, "annihilator_piece");
  if (d < 0) throw InvalidInput("negative degree");
  if (d > H.degree()) return GradedBasis::full_slice(H.n_vars(), d);
  RatMat cat = catalecticant(H, d);
  RatMat ker = kernel_basis(transposed(cat));
  return GradedBasis::from_rows(H.n_vars(), d, ker);
}

GradedBasis derived_piece(const MultiPoly& H, int d) {
  require_homogeneous_nonzero(H, "derived_piece");
  const int s = H.degree();
  if (d < 0 || d > s) throw InvalidInput("derived_piece degree out of range");
  return GradedBasis::from_rows(H.n_vars(), d, catalecticant(H, s - d));
}

HilbertFunction hilbert_function(const MultiPoly& H) {
  require_homogeneous_nonzero(H, "hilbert_function");
  const int s = H.degree();
  HilbertFunction hf;
  hf.socle_degree = s;
  hf.values.reserve(static_cast<std::size_t>(s) + 1);
  for (int d = 0; d <= s; ++d)
    hf.values.push_back(static_cast<int>(monomial_count(H.n_vars(), d)) -
                        static_cast<int>(annihilator_piece(H, d).dim()));
  return hf;
}

MinimalGenerators minimal_generators(const MultiPoly& H) {
  require_homogeneous_nonzero(H, "minimal_generators");
  const int n = H.n_vars();
  const int s = H.degree();
  MinimalGenerators result;

  GradedBasis prev(n, 0);  // Ann(H)_0 = 0 since H != 0
  for (int d = 1; d <= s + 1; ++d) {
    GradedBasis ann = annihilator_piece(H, d);
    // span of S_1 * Ann_(d-1)
    RowSpace grown(monomial_count(n, d));
    RatMat prev_rows = prev.space().basis_matrix();
    for (Index r = 0; r < prev_rows.rows(); ++r) {
      MultiPoly g = poly_from_coords(n, d - 1, prev_rows.row(r));
      for (int j = 0; j < n; ++j)
        grown.insert(poly_coords(mul(MultiPoly::variable(n, j), g), d));
    }
    // canonical complement: residues of the Ann_d basis modulo the grown span
    RatMat ann_rows = ann.space().basis_matrix();
    std::vector<MultiPoly> new_gens;
    for (Index r = 0; r < ann_rows.rows(); ++r) {
      RatRowVec residue = grown.reduce(ann_rows.row(r));
      Index lead = -1;
      for (Index j = 0; j < residue.cols(); ++j) {
        if (residue(j) != 0) {
          lead = j;
          break;
        }
      }
      if (lead < 0) continue;
      residue /= residue(lead);
      grown.insert(residue);
      new_gens.push_back(poly_from_coords(n, d, residue));
    }
    // residues were reduced against an evolving span; re-echelonize so the
    // degree-d generators are canonical on their own
    if (!new_gens.empty()) {
      GradedBasis canon = GradedBasis::from_polys(n, d, new_gens);
      for (auto& g : canon.polys()) result.generators.emplace_back(d, std::move(g));
    }
    prev = std::move(ann);
  }
  return result;
}

GradedBasis inverse_system_top(std::span<const MultiPoly> gens, int s) {
  if (gens.empty()) throw InvalidInput("inverse_system_top: empty generator list");
  if (s < 0) throw InvalidInput("negative socle degree");
  const int n = gens.front().n_vars();
  const auto top_mons = monomials(n, s);
  const Index dim_top = static_cast<Index>(top_mons.size());

  // stack one constraint block per generator of degree <= s:
  // row (g, t) , column c : coefficient of monomial t in g o x^c
  std::vector<RatRowVec> constraint_rows;
  for (const auto& g : gens) {
    if (g.n_vars() != n) throw InvalidInput("mixed variable counts in generator list");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InvalidInput("generators must be homogeneous");
    const int dg = g.degree();
    if (dg > s) continue;
    const Index target_dim = monomial_count(n, s - dg);
    RatMat block(dim_top, target_dim);
    for (Index c = 0; c < dim_top; ++c) {
      MultiPoly image = contract(g, MultiPoly::monomial(top_mons[static_cast<std::size_t>(c)]));
      block.row(c) = image.is_zero() ? RatRowVec::Constant(target_dim, Rational(0))
                                     : poly_coords(image, s - dg);
    }
    for (Index t = 0; t < target_dim; ++t)
      constraint_rows.push_back(block.col(t).transpose());
  }

  if (constraint_rows.empty()) return GradedBasis::full_slice(n, s);
  RatMat constraints(static_cast<Index>(constraint_rows.size()), dim_top);
  for (std::size_t i = 0; i < constraint_rows.size(); ++i)
    constraints.row(static_cast<Index>(i)) = constraint_rows[i];
  return GradedBasis::from_rows(n, s, kernel_basis(constraints));
}

GradedBasis socle_piece(std::span<const MultiPoly> gens, int d) {
  if (gens.empty()) throw InvalidInput("socle_piece: empty generator list");
  if (d < 0) throw InvalidInput("negative degree");
  const int n = gens.front().n_vars();

  GradedBasis ideal_d = ideal_piece(gens, d);
  GradedBasis ideal_d1 = ideal_piece(gens, d + 1);
  const auto mons_d = monomials(n, d);
  const Index dim_d = static_cast<Index>(mons_d.size());
  const Index dim_d1 = monomial_count(n, d + 1);

  // constraint matrix for { a in S_d : x_j a in (gens)_(d+1) for all j }:
  // row per degree-d monomial, one block of residue coordinates per variable
  RatMat constraints(dim_d, dim_d1 * n);
  Exponents shifted(n);
  for (Index i = 0; i < dim_d; ++i) {
    for (int j = 0; j < n; ++j) {
      shifted = mons_d[static_cast<std::size_t>(i)];
      shifted[j] += 1;
      RatRowVec image = poly_coords(MultiPoly::monomial(shifted), d + 1);
      constraints.row(i).segment(static_cast<Index>(j) * dim_d1, dim_d1) =
          ideal_d1.space().reduce(image);
    }
  }
  RatMat annihilating = kernel_basis(transposed(constraints));

  // quotient by the degree-d ideal slice: echelon coset representatives
  RowSpace accumulated(dim_d);
  RatMat ideal_rows = ideal_d.space().basis_matrix();
  for (Index i = 0; i < ideal_rows.rows(); ++i) accumulated.insert(ideal_rows.row(i));
  std::vector<MultiPoly> reps;
  for (Index i = 0; i < annihilating.rows(); ++i) {
    RatRowVec residue = accumulated.reduce(annihilating.row(i));
    Index lead = -1;
    for (Index j = 0; j < residue.cols(); ++j) {
      if (residue(j) != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    residue /= residue(lead);
    accumulated.insert(residue);
    reps.push_back(poly_from_coords(n, d, residue));
  }
  return GradedBasis::from_polys(n, d, reps);
}

}  // namespace apolar
