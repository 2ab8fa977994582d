#pragma once

#include <string>
#include <string_view>

#include "apolar/multipoly.hpp"

namespace apolar {

// Polynomial text grammar (whitespace insignificant):
//   poly  := ['-'] term (('+'|'-') term)*
//   term  := coeff ['*' mono] | mono
//   coeff := int | int '/' int
//   mono  := factor ('*' factor)*
//   factor:= 'x' index ['^' exp]

/// Strict parse into an n_vars-variable polynomial. A variable index >= n_vars
/// is a ParseError.
MultiPoly parse_poly(std::string_view text, int n_vars);

/// Parse with the variable count inferred as (max index) + 1, at least 1.
MultiPoly parse_poly(std::string_view text);

/// Largest variable index appearing in syntactically valid text; -1 if the
/// text has no variables (a constant).
int max_variable_index(std::string_view text);

/// Canonical form: terms in descending graded-lex order, reduced coefficients,
/// explicit '*' and '^', e.g. "3*x0^2*x1 - x2^3". parse(format(p)) == p.
std::string format_poly(const MultiPoly& p);

}  // namespace apolar
