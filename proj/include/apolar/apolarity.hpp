#pragma once

#include <span>
#include <utility>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/multipoly.hpp"

namespace apolar {

/// Contraction action of the polynomial ring on its dual: f acts on g as the
/// constant-coefficient differential operator f(d/dx0, ..., d/dxn). On
/// monomials, x^a o x^b = (prod_i b_i!/(b_i-a_i)!) x^(b-a) when a <= b
/// componentwise and 0 otherwise; the action is extended bilinearly.
MultiPoly contract(const MultiPoly& f, const MultiPoly& g);

/// Basis of one degree-d graded slice of an ideal or submodule, stored as the
/// unique RREF with respect to the canonical monomial order.
class GradedBasis {
 public:
  GradedBasis(int n_vars, int degree);

  static GradedBasis from_rows(int n_vars, int degree, const RatMat& rows);
  static GradedBasis from_polys(int n_vars, int degree, std::span<const MultiPoly> polys);
  /// The whole degree-d slice of the ring.
  static GradedBasis full_slice(int n_vars, int degree);

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  Index dim() const { return space_.dim(); }
  const RowSpace& space() const { return space_; }

  /// Basis members materialized as polynomials, leading coefficient 1,
  /// ordered by leading monomial.
  std::vector<MultiPoly> polys() const;

  bool contains(const MultiPoly& p) const;
  bool operator==(const GradedBasis& o) const;

 private:
  int n_vars_;
  int degree_;
  RowSpace space_;
};

/// Coordinates of a homogeneous degree-d polynomial over the canonical
/// monomial basis, and back.
RatRowVec poly_coords(const MultiPoly& p, int degree);
MultiPoly poly_from_coords(int n_vars, int degree, const RatRowVec& v);

/// Catalecticant matrix of the contraction pairing S_d x Gamma_(s-d): rows
/// are indexed by degree-d monomials, columns by degree-(s-d) monomials,
/// entry = coefficient of the column monomial in (row monomial) o H.
RatMat catalecticant(const MultiPoly& H, int d);

/// Degree-d slice of Ann(H) = { f : f o H = 0 }, the kernel of the transposed
/// catalecticant. For d > deg H this is the whole slice S_d.
GradedBasis annihilator_piece(const MultiPoly& H, int d);

/// Degree-d slice of the submodule generated by H and all of its partial
/// derivatives: span{ f o H : f homogeneous of degree s-d }.
GradedBasis derived_piece(const MultiPoly& H, int d);

struct HilbertFunction {
  std::vector<int> values;  // HF(0), ..., HF(s)
  int socle_degree = 0;

  bool operator==(const HilbertFunction& o) const {
    return values == o.values && socle_degree == o.socle_degree;
  }
};

/// HF(d) = dim S_d - dim Ann(H)_d for 0 <= d <= deg H.
HilbertFunction hilbert_function(const MultiPoly& H);

/// Minimal homogeneous generators of Ann(H), found degree by degree as the
/// canonical complement of S_1 * Ann_(d-1) inside Ann_d. No generator can
/// live beyond degree s+1 since the full slice S_(s+1) is already inside.
struct MinimalGenerators {
  std::vector<std::pair<int, MultiPoly>> generators;  // (degree, poly), degree ascending

  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(generators.size());
    for (const auto& g : generators) d.push_back(g.first);
    return d;
  }
  std::vector<MultiPoly> polys() const {
    std::vector<MultiPoly> p;
    p.reserve(generators.size());
    for (const auto& g : generators) p.push_back(g.second);
    return p;
  }
};

MinimalGenerators minimal_generators(const MultiPoly& H);

/// { G of degree s : f o G = 0 for every f in the ideal generated by gens }.
/// When the quotient is Gorenstein of socle degree s, this is a line and
/// recovers the dual generator up to scalar.
GradedBasis inverse_system_top(std::span<const MultiPoly> gens, int s);

/// Degree-d slice of the socle of S/(gens): echelon coset representatives a
/// with x_i * a inside the ideal slice of degree d+1 for every i.
GradedBasis socle_piece(std::span<const MultiPoly> gens, int d);

}  // namespace apolar
