#include "apolar/short_algebras.hpp"

#include "apolar/parse.hpp"

namespace apolar {

namespace {

// Classification table of the graded Artinian Gorenstein quotients of
// k[x0,x1,x2] with Hilbert function {1,3,3,1}, as printed in the source
// table (dual-ring variables rendered in the same x alphabet). Rows 2 and 3
// contain out-of-range indices as printed; `inverse_system_used` is the
// polynomial the computation runs on, `note` records any repair.
struct TableRow {
  const char* geometry;
  const char* printed_inverse_system;
  const char* inverse_system_used;  // parseable, 3 variables
  std::vector<const char*> printed_model;
  const char* note;  // nullptr when the row needs none
};

const TableRow kRows[6] = {
    {"Three independent lines", "x0*x1*x2", "x0*x1*x2",
     {"x0^2", "x1^2", "x2^2"}, nullptr},
    {"Conic and a tangent line", "x1*(x0*x1 - x2^2)", "x0*x1^2 - x1*x2^2",
     {"x0^2", "x0*x3^2", "x2*x1^2", "x1^3", "x2^2 + x0*x1"},
     "printed model references x3, which does not exist in the 3-variable ring"},
    {"Conic and a non-tangent line", "x3*(x1*x2 - x3^2)", "x0*x1*x2 - x0^3",
     {"x0^2", "x1^2", "x2^2 + 6*x0*x1"},
     "printed inverse system references x3; x0 (the only unused index) is used in its "
     "place"},
    {"Irreducible nodal cubic", "x1^2*x2 - x0^2*(x0 + x2)", "x1^2*x2 - x0^3 - x0^2*x2",
     {"x1^2", "x0*x1", "x0^2 + x1^2 - 3*x0*x2"}, nullptr},
    {"Irreducible cuspidal cubic", "x1^2*x2 - x0^3", "x1^2*x2 - x0^3",
     {"x2^2", "x0*x1", "x0*x2", "x1^3", "x0^3 + 3*x1^2*x2"}, nullptr},
    {"Elliptic Fermat curve", "x0^3 + x1^3 + x2^3", "x0^3 + x1^3 + x2^3",
     {"x1*x2", "x0*x2", "x0*x1", "x1^3 - x2^3", "x0^3 - x2^3"}, nullptr},
};

}  // namespace

LegendreParam::LegendreParam(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_ == 0 || lambda_ == 1)
    throw InvalidInput("lambda must avoid 0 and 1 (degenerate cubic)");
}

MultiPoly legendre(const LegendreParam& lambda) {
  const Rational& l = lambda.value();
  const MultiPoly y0 = MultiPoly::variable(3, 0);
  const MultiPoly y1 = MultiPoly::variable(3, 1);
  const MultiPoly y2 = MultiPoly::variable(3, 2);
  return mul(mul(y1, y1), y2) - mul(y0, mul(y0 - y2, y0 - l * y2));
}

Rational j_invariant(const LegendreParam& lambda) {
  const Rational& l = lambda.value();
  const Rational q = l * l - l + 1;
  return 256 * q * q * q / (l * l * (l - 1) * (l - 1));
}

std::vector<MultiPoly> k_lambda(const LegendreParam& lambda) {
  const Rational& l = lambda.value();
  const MultiPoly x0 = MultiPoly::variable(3, 0);
  const MultiPoly x1 = MultiPoly::variable(3, 1);
  const MultiPoly x2 = MultiPoly::variable(3, 2);
  MultiPoly f1 = l * l * mul(x0, x0) + l * (1 + l) * mul(x0, x2) +
                 (l * l - l + 1) * mul(x2, x2);
  MultiPoly f2 = l * l * mul(x1, x1) + l * mul(x0, x2) + (1 + l) * mul(x2, x2);
  return {mul(x0, x1), std::move(f1), std::move(f2)};
}

CICertificate verify_k_lambda(const LegendreParam& lambda) {
  const Rational& l = lambda.value();
  CICertificate cert = verify_certificate(legendre(lambda), k_lambda(lambda));
  const Rational expected = -16 * l * l * (l * l - l + 1);
  if (cert.jacobian_contraction != MultiPoly::constant(3, expected))
    throw InternalError("det(Jac) o H_lambda deviates from -16 l^2 (l^2 - l + 1)");
  if (!cert.valid) throw InternalError("K_lambda certificate failed to validate");
  return cert;
}

bool j_equivalent(const LegendreParam& l1, const LegendreParam& l2) {
  return j_invariant(l1) == j_invariant(l2);
}

TableRowReport verify_table_row(int row, std::optional<LegendreParam> lambda) {
  if (row < 1 || row > 7) throw InvalidInput("table row must be between 1 and 7");

  TableRowReport report;
  report.row = row;

  std::vector<MultiPoly> model;
  if (row == 7) {
    if (!lambda) throw InvalidInput("row 7 is the Legendre family and needs lambda");
    if (j_invariant(*lambda) == 0)
      throw InvalidInput("row 7 requires j(lambda) != 0");
    report.geometry = "Elliptic non Fermat curve";
    report.inverse_system = legendre(*lambda);
    report.printed_inverse_system = format_poly(report.inverse_system);
    model = k_lambda(*lambda);
    for (const auto& g : model) report.printed_model.push_back(format_poly(g));
    report.model_parsed = true;
  } else {
    const TableRow& data = kRows[row - 1];
    report.geometry = data.geometry;
    report.printed_inverse_system = data.printed_inverse_system;
    report.inverse_system = parse_poly(data.inverse_system_used, 3);
    if (data.note) report.notes.emplace_back(data.note);
    for (const char* text : data.printed_model) report.printed_model.emplace_back(text);
    report.model_parsed = true;
    for (const char* text : data.printed_model) {
      try {
        model.push_back(parse_poly(text, 3));
      } catch (const ParseError& e) {
        report.model_parsed = false;
        report.notes.push_back("printed generator \"" + std::string(text) +
                               "\" does not parse: " + e.what());
      }
    }
  }

  report.hf = hilbert_function(report.inverse_system);
  MinimalGenerators gens = minimal_generators(report.inverse_system);
  report.generator_degrees = gens.degrees();
  report.ci = gens.generators.size() == 3;

  if (report.model_parsed) {
    report.model_matches = true;
    for (int d = 0; d <= 4; ++d) {
      if (!(ideal_piece(model, d) == annihilator_piece(report.inverse_system, d))) {
        report.model_matches = false;
        report.notes.push_back("printed model differs from Ann in degree " +
                               std::to_string(d));
      }
    }
  } else {
    report.model_matches = false;
  }
  return report;
}

}  // namespace apolar
