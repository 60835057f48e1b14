#pragma once

#include "qtau/numeric.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qtau {

// Dense univariate polynomial, coefficients stored from degree 0 upwards,
// trailing zeros removed. C must provide C(long), + - *, and is_zero(C).
template <class C>
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c) : c_{C(c)} { trim(); }
  UPoly(C c) : c_{std::move(c)} { trim(); }
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(C c, int deg) {
    std::vector<C> v(deg + 1, C(0));
    v[deg] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : C(0); }
  const C& lead() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = C(0) - x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (qtau_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator*(const C& s, UPoly a) {
    for (auto& x : a.c_) x = s * x;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> v(c_.size() - 1, C(0));
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = C(static_cast<long>(k)) * c_[k];
    return UPoly(std::move(v));
  }

  // Multiply by x^k, k >= 0.
  UPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, C(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  template <class T>
  T eval(const T& at) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

 private:
  static bool qtau_is_zero(const C& c) {
    using qtau::is_zero;
    return is_zero(c);
  }
  void trim() {
    while (!c_.empty() && qtau_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

// Euclidean division over a field.
template <class C>
std::pair<UPoly<C>, UPoly<C>> divmod(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<C> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly<C>(), a};
  std::vector<C> qv(a.degree() - db + 1, C(0));
  C inv = C(1) / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    C f = r[k] * inv;
    qv[k - db] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly<C>(std::move(qv)), UPoly<C>(std::move(r))};
}

template <class C>
UPoly<C> monic(const UPoly<C>& a) {
  if (a.is_zero()) return a;
  return (C(1) / a.lead()) * a;
}

template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Exact quotient; throws if b does not divide a.
template <class C>
UPoly<C> exact_div(const UPoly<C>& a, const UPoly<C>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw CheckFailure("polynomial division left a nonzero remainder");
  return q;
}

using QPoly = UPoly<Rational>;

std::string to_string(const QPoly& p, const std::string& var);

}  // namespace qtau
