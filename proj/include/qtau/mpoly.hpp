#pragma once

#include "qtau/format.hpp"
#include "qtau/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtau {

// Exponent vector with trailing zeros removed.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

// Graded-lex, larger first, so the leading term is the first map entry.
struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int x = k < a.size() ? a[k] : 0;
      int y = k < b.size() ? b[k] : 0;
      if (x != y) return x > y;
    }
    return false;
  }
};

inline Exps add_exps(const Exps& a, const Exps& b) {
  Exps out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Sparse multivariate polynomial with nonnegative exponents.
template <class C>
class MPoly {
 public:
  using Terms = std::map<Exps, C, GrlexGreater>;

  MPoly() = default;
  MPoly(long c) {
    if (c != 0) t_[{}] = C(c);
  }
  MPoly(const C& c) {
    if (!qtau_is_zero(c)) t_[{}] = c;
  }

  static MPoly var(int k) {
    Exps e(k + 1, 0);
    e[k] = 1;
    return monomial(e, C(1));
  }
  static MPoly monomial(Exps e, const C& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    MPoly p;
    if (!qtau_is_zero(c)) p.t_[std::move(e)] = c;
    return p;
  }
  // Linear form sum_k v[k] x_k + c.
  static MPoly linear(const IVec& v, long c = 0) {
    MPoly p(c);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) p += MPoly(C(v[k])) * var(static_cast<int>(k));
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  C constant() const {
    auto it = t_.find(Exps{});
    return it == t_.end() ? C(0) : it->second;
  }
  const Exps& lead_exps() const { return t_.begin()->first; }
  const C& lead_coeff() const { return t_.begin()->second; }
  int total_degree() const { return t_.empty() ? -1 : qtau::total_degree(t_.begin()->first); }
  int num_vars() const {
    std::size_t n = 0;
    for (auto& [e, c] : t_) n = std::max(n, e.size());
    return static_cast<int>(n);
  }
  int degree_in(int k) const {
    int d = t_.empty() ? -1 : 0;
    for (auto& [e, c] : t_)
      if (k < static_cast<int>(e.size())) d = std::max(d, e[k]);
    return d;
  }

  MPoly& operator+=(const MPoly& o) {
    for (auto& [e, c] : o.t_) accumulate(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [e, c] : o.t_) accumulate(e, C(0) - c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.t_) c = C(0) - c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) out.accumulate(add_exps(ea, eb), ca * cb);
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator*(const C& s, MPoly a) {
    if (qtau_is_zero(s)) return {};
    for (auto& [e, c] : a.t_) c = s * c;
    return a;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator<(const MPoly& a, const MPoly& b) {
    return std::lexicographical_compare(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return GrlexGreater{}(x.first, y.first);
                                          return x.second < y.second;
                                        });
  }

  MPoly pow(int e) const {
    MPoly out(1);
    for (int k = 0; k < e; ++k) out *= *this;
    return out;
  }

  // Ring homomorphism sending x_k to images[k] (identity beyond images.size()).
  template <class R>
  R substitute(const std::vector<R>& images, const R& one) const {
    std::map<std::pair<int, int>, R> cache;
    auto power = [&](int k, int e) -> const R& {
      int have = 1;
      if (!cache.count({k, 1})) cache.emplace(std::make_pair(k, 1), images.at(k));
      while (have < e && cache.count({k, have + 1})) ++have;
      for (; have < e; ++have) cache.emplace(std::make_pair(k, have + 1), cache.at({k, have}) * images.at(k));
      return cache.at({k, e});
    };
    R out = one - one;
    for (auto& [e, c] : t_) {
      R term = R(c) * one;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0) term = term * power(static_cast<int>(k), e[k]);
      out = out + term;
    }
    return out;
  }

  MPoly substitute(const std::vector<MPoly>& images) const {
    std::vector<MPoly> full = images;
    for (int k = static_cast<int>(full.size()); k < num_vars(); ++k) full.push_back(var(k));
    return substitute<MPoly>(full, MPoly(1));
  }

  template <class R>
  R eval(const std::vector<R>& at) const {
    R out = R(0);
    for (auto& [e, c] : t_) {
      R term = R(c);
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int j = 0; j < e[k]; ++j) term = term * at.at(k);
      out = out + term;
    }
    return out;
  }

  std::string str(const std::vector<std::string>& names) const {
    std::vector<SignedTerm> terms;
    for (auto& [e, c] : t_) {
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += " ";
        mono += power_str(names.at(k), e[k]);
      }
      terms.push_back(coef_term(c, mono));
    }
    return join_terms(terms);
  }

 private:
  static bool qtau_is_zero(const C& c) {
    using qtau::is_zero;
    return is_zero(c);
  }
  void accumulate(const Exps& e, const C& c) {
    if (qtau_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (qtau_is_zero(it->second)) t_.erase(it);
    }
  }
  Terms t_;
};

using QMPoly = MPoly<Rational>;

inline bool is_zero(const QMPoly& p) { return p.is_zero(); }

}  // namespace qtau
