#pragma once

#include <span>
#include <vector>

#include "apolar/apolarity.hpp"

namespace apolar {

/// n+1 homogeneous forms in n+1 variables. The critical degree is
/// D = sum(d_i) - n, one past the socle degree of a complete intersection of
/// this type; the quotient vanishes there iff the forms are a regular
/// sequence iff their resultant is nonzero.
class FormSystem {
 public:
  explicit FormSystem(std::vector<MultiPoly> forms);

  int n_vars() const { return n_vars_; }
  const std::vector<MultiPoly>& forms() const { return forms_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int critical_degree() const;  // sum(d_i) - n
  int socle_degree() const;     // sum(d_i) - (n+1)

 private:
  int n_vars_;
  std::vector<MultiPoly> forms_;
  std::vector<int> degrees_;
};

/// Evidence for the regular-sequence verdict: the Macaulay matrix rank at the
/// critical degree. regular iff rank == cols == dim S_D.
struct RankWitness {
  int degree = 0;
  Index rows = 0;
  Index cols = 0;
  Index rank = 0;
  bool regular = false;
};

/// Degree-d slice of the ideal generated by gens:
/// span{ m * g : g in gens, m monomial of degree d - deg g }.
GradedBasis ideal_piece(std::span<const MultiPoly> gens, int d);

/// dim (S/(gens))_d for d = 0..up_to.
std::vector<int> quotient_hf(std::span<const MultiPoly> gens, int up_to);

/// Rows are the coefficient rows of m * f_i over the degree-d monomial
/// columns, ordered by (form index, canonical order of m).
RatMat macaulay_matrix(const FormSystem& sys, int d);

/// Rank test at the critical degree. The scalar resultant is never computed;
/// only its (non)vanishing is decided, which is all downstream code needs.
RankWitness is_regular_sequence(const FormSystem& sys);

/// Coefficients of prod_i (1 - t^d_i) / (1 - t)^n_vars up to degree up_to:
/// the Hilbert function of a complete intersection of type (d_i).
std::vector<long long> ci_hilbert_series(const std::vector<int>& degrees, int n_vars,
                                         int up_to);

}  // namespace apolar
