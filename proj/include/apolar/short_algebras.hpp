#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/ci_certifier.hpp"

namespace apolar {

/// Parameter of the Legendre cubic; 0 and 1 are excluded (the curve
/// degenerates there).
class LegendreParam {
 public:
  explicit LegendreParam(Rational lambda);
  const Rational& value() const { return lambda_; }

 private:
  Rational lambda_;
};

/// H_lambda = x1^2 x2 - x0 (x0 - x2)(x0 - lambda x2), expanded, degree 3 in
/// three variables. (The dual-ring display alphabet is also x0..x2.)
MultiPoly legendre(const LegendreParam& lambda);

/// j(lambda) = 2^8 (lambda^2-lambda+1)^3 / (lambda^2 (lambda-1)^2).
Rational j_invariant(const LegendreParam& lambda);

/// The three quadrics (x0 x1, F1, F2) cutting out Ann(H_lambda):
/// F1 = l^2 x0^2 + l(1+l) x0 x2 + (l^2-l+1) x2^2,
/// F2 = l^2 x1^2 + l x0 x2 + (1+l) x2^2.
std::vector<MultiPoly> k_lambda(const LegendreParam& lambda);

/// Certificate for (x0 x1, F1, F2) against H_lambda. The condition-(iii)
/// scalar must equal -16 lambda^2 (lambda^2 - lambda + 1) exactly; any
/// deviation is an internal invariant breach.
CICertificate verify_k_lambda(const LegendreParam& lambda);

/// Same j-invariant, i.e. the two cubics are projectively isomorphic.
bool j_equivalent(const LegendreParam& l1, const LegendreParam& l2);

/// One row of the classification of graded Artinian Gorenstein quotients of
/// a 3-variable ring with Hilbert function {1,3,3,1}: the row's inverse
/// system is taken as ground truth, the model ideal is recomputed from it,
/// and the printed model is compared slice-wise (degrees <= 4). Printing
/// defects in the source table (out-of-range variable indices, a model that
/// fails to annihilate its inverse system) are flagged, never repaired into
/// the comparison.
struct TableRowReport {
  int row = 0;
  std::string geometry;
  std::string printed_inverse_system;
  MultiPoly inverse_system;            // polynomial actually used
  HilbertFunction hf;
  std::vector<int> generator_degrees;  // of the recomputed minimal generators
  bool ci = false;
  std::vector<std::string> printed_model;
  bool model_parsed = false;
  bool model_matches = false;
  std::vector<std::string> notes;

  TableRowReport() : inverse_system(3) {}
};

/// row in 1..7; row 7 is the Legendre family and requires lambda.
TableRowReport verify_table_row(int row, std::optional<LegendreParam> lambda = {});

}  // namespace apolar
