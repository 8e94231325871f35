#pragma once

// Exact evaluation of the small arithmetic language used by catalog
// records: integers, + - * / ^, parentheses, named constants, polynomial
// variables and the functions max, min, le(a,b), lt(a,b) (1 or 0) and
// if(c,a,b) (a when c != 0).
//
//   list := item (',' item)*
//   item := ('[' name '=' expr '..' expr ']')* expr ('@' expr)?
//
// A bracket prefix repeats the item for every integer value of the index;
// '@ m' repeats it m times.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "singspec/poly.hpp"

namespace singspec {

struct ExprEnv {
  /// Names of the polynomial variables, in order. May be empty.
  std::vector<std::string> vars;
  /// Values of parameters and moduli.
  std::map<std::string, Rational> constants;
};

/// Throws ParseError for malformed text and DomainError for division by a
/// non-constant or by zero, or a non-integral or negative exponent.
Polynomial eval_polynomial(std::string_view text, const ExprEnv& env);
/// As eval_polynomial, and the result must be constant.
Rational eval_rational(std::string_view text, const ExprEnv& env);
/// Evaluates a list of constant items.
std::vector<Rational> eval_list(std::string_view text, const ExprEnv& env);

}  // namespace singspec
