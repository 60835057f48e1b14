#include "qtau/format.hpp"
#include "qtau/ratfun.hpp"

namespace qtau {

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && s[k - 1] == ' ') return true;
  }
  return false;
}

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == 0)
      out += terms[k].negative ? "-" : "";
    else
      out += terms[k].negative ? " - " : " + ";
    out += terms[k].body;
  }
  return out;
}

SignedTerm coef_term(const Rational& c, const std::string& mono) {
  SignedTerm t;
  t.negative = c < 0;
  Rational a = t.negative ? Rational(-c) : c;
  if (mono.empty())
    t.body = a.str();
  else if (a == 1)
    t.body = mono;
  else
    t.body = a.str() + " " + mono;
  return t;
}

SignedTerm product_term(const std::string& s, const std::string& mono) {
  SignedTerm t;
  if (mono.empty()) {
    t.negative = s[0] == '-';
    t.body = t.negative ? s.substr(1) : s;
  } else if (s == "1") {
    t.body = mono;
  } else if (s == "-1") {
    t = {true, mono};
  } else if (!has_top_level_sum(s)) {
    t.negative = s[0] == '-';
    t.body = (t.negative ? s.substr(1) : s) + " " + mono;
  } else {
    t.body = "(" + s + ") " + mono;
  }
  return t;
}

std::string power_str(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

std::string linear_str(const IVec& coeffs, const std::vector<std::string>& names) {
  std::vector<SignedTerm> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) terms.push_back(coef_term(Rational(coeffs[k]), names.at(k)));
  return join_terms(terms);
}

std::string to_string(const QPoly& p, const std::string& var) {
  std::vector<SignedTerm> terms;
  for (int k = p.degree(); k >= 0; --k)
    if (!p.coeffs()[k].is_zero()) terms.push_back(coef_term(p.coeffs()[k], power_str(var, k)));
  return join_terms(terms);
}

}  // namespace qtau
