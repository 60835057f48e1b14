#pragma once

#include "qtau/upoly.hpp"

#include <string>

namespace qtau {

// Exact rational function of q over the rationals: reduced numerator over a
// monic denominator. Zero is 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(long c) : num_(Rational(c)), den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}
  RatFun(QPoly num, QPoly den);

  static RatFun q() { return RatFun(QPoly::x(), QPoly(1)); }
  static RatFun qpow(long n);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == QPoly(1); }
  // Constant rational (no q dependence).
  bool is_rational() const { return den_.degree() == 0 && num_.degree() <= 0; }
  Rational rational() const { return num_.coeff(0); }
  // Denominator is a power of q, so the value is a Laurent polynomial.
  bool is_laurent() const;
  // c q^n with c rational.
  bool is_laurent_monomial() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFun inverse() const;

  Rational eval(const Rational& at) const;
  // Exact value at q = 1; throws if q = 1 is a pole.
  Rational at_one() const { return eval(Rational(1)); }

  std::string str() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }
inline std::string to_string(const RatFun& r) { return r.str(); }

// [n]_{q^d}
RatFun qint(long n, long d = 1);
// [k]_{q^d}!
RatFun qfactorial(long k, long d = 1);
// q-binomial [n choose k]_{q^d} for any integer n, k >= 0.
RatFun qbinom(long n, long k, long d = 1);

}  // namespace qtau
