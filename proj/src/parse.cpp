#include "qtau/parse.hpp"

namespace qtau {

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    char ch = s[k];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = k;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(k, j - k)});
      k = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = k;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Ident, s.substr(k, j - k)});
      k = j;
    } else if (std::string("+-*/^()[]{}_,").find(ch) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, ch)});
      ++k;
    } else {
      throw InputError(std::string("parse error: unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

int coroot_index(const RootDatum& rd, const std::string& name) {
  for (int k = 0; k < rd.lattice_rank(); ++k)
    if (rd.coroot_names[k] == name) return k;
  return -1;
}

}  // namespace qtau
