#pragma once

// Small exact expression language for the expected-results table.
//
//   literals     integers, "quoted strings", and the atoms real / complex / quaternionic
//   operators    ?:  ||  &&  == != < <= > >=  + -  * / %  unary - !
//   functions    binom(n, k)  min(a, b)  max(a, b)  pow(a, n)
//
// Booleans are the rationals 0 and 1. Division is exact.

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "hodgerep/rational.hpp"

namespace hodgerep {

using ExprValue = std::variant<Rational, std::string>;
using ExprEnv = std::map<std::string, Rational, std::less<>>;

/// Throws ParseError on syntax errors, unknown identifiers and type errors.
ExprValue evaluate(std::string_view expr, const ExprEnv& env);
Rational evaluate_number(std::string_view expr, const ExprEnv& env);
/// Integral result required.
long evaluate_int(std::string_view expr, const ExprEnv& env);
bool evaluate_bool(std::string_view expr, const ExprEnv& env);
std::string evaluate_string(std::string_view expr, const ExprEnv& env);

/// Replaces every {expr} in the template by its integer value.
std::string expand_template(std::string_view tmpl, const ExprEnv& env);

}  // namespace hodgerep
