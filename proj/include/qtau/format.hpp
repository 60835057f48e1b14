#pragma once

#include "qtau/numeric.hpp"

#include <string>
#include <vector>

namespace qtau {

struct SignedTerm {
  bool negative = false;
  std::string body;
};

// True when s contains '+' or '-' outside parentheses, brackets or braces
// after its first character.
bool has_top_level_sum(const std::string& s);

// "a + b - c"; "0" when empty.
std::string join_terms(const std::vector<SignedTerm>& terms);

// Rational coefficient times a product string ("" means the unit monomial).
SignedTerm coef_term(const Rational& c, const std::string& mono);

// Coefficient text times a product string, parenthesizing a coefficient that
// is a sum. Coefficient "1" or "-1" is absorbed.
SignedTerm product_term(const std::string& coef, const std::string& mono);

// x, x^3, x^-2 (exponent 0 gives "").
std::string power_str(const std::string& var, long e);

// Linear form over named symbols, e.g. "b1 - 2 b3"; "0" when zero.
std::string linear_str(const IVec& coeffs, const std::vector<std::string>& names);

}  // namespace qtau
