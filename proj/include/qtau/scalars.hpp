#pragma once

#include "qtau/mpoly.hpp"
#include "qtau/ratfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtau {

// KM parameter scalars: polynomials over Q in the coroot basis symbols.
using ParamKM = QMPoly;

// q parameter scalars: finite sums sum_gamma c_gamma(q) q^gamma, gamma in Qv
// (keys are coroot coordinate vectors with trailing zeros removed).
class ParamQ {
 public:
  using Terms = std::map<IVec, RatFun>;

  ParamQ() = default;
  ParamQ(long c) : ParamQ(RatFun(c)) {}
  ParamQ(const Rational& c) : ParamQ(RatFun(c)) {}
  ParamQ(const RatFun& c) {
    if (!c.is_zero()) t_[{}] = c;
  }
  static ParamQ qpow(const IVec& gamma, const RatFun& c = RatFun(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_field_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  RatFun field_constant() const;
  // c q^gamma with a single term.
  bool is_unit() const { return t_.size() == 1; }
  ParamQ inverse() const;

  ParamQ& operator+=(const ParamQ& o);
  ParamQ& operator-=(const ParamQ& o);
  friend ParamQ operator+(ParamQ a, const ParamQ& b) { return a += b; }
  friend ParamQ operator-(ParamQ a, const ParamQ& b) { return a -= b; }
  friend ParamQ operator-(ParamQ a) {
    for (auto& [g, c] : a.t_) c = -c;
    return a;
  }
  friend ParamQ operator*(const ParamQ& a, const ParamQ& b);
  ParamQ& operator*=(const ParamQ& o) { return *this = *this * o; }
  friend bool operator==(const ParamQ& a, const ParamQ& b) { return a.t_ == b.t_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  void accumulate(const IVec& g, const RatFun& c);
  Terms t_;
};

inline bool is_zero(const ParamQ& s) { return s.is_zero(); }

// Affine coroot exponent beta + n.
struct AffineCoroot {
  IVec beta;
  long n = 0;
};

// Scalar-ring interface shared by both cases.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<ParamKM> {
  using Field = Rational;
  static constexpr bool quantum = false;
  static ParamKM from_field(const Rational& c) { return ParamKM(c); }
  static ParamKM symbol(const IVec& beta) { return ParamKM::linear(beta); }
  // Basis coroot symbol k.
  static ParamKM symbol_of(int k, int) { return ParamKM::var(k); }
  // beta -> beta + <beta, nu>
  static ParamKM shift(const ParamKM& s, const IVec& nu);
  // basis symbol k -> images[k] (a coroot vector)
  static ParamKM map_coroots(const ParamKM& s, const std::vector<IVec>& images);
  static Rational phi(const ParamKM& s, const IVec& lambda);
  static bool is_field_constant(const ParamKM& s) { return s.is_constant(); }
  static Rational field_constant(const ParamKM& s) { return s.constant(); }
  static bool is_unit(const ParamKM& s) { return s.is_constant() && !s.is_zero(); }
  static ParamKM inverse(const ParamKM& s);
  static std::string str(const ParamKM& s, const std::vector<std::string>& names) {
    return s.str(names);
  }
  static bool single_term(const ParamKM& s) { return s.terms().size() <= 1; }
};

template <>
struct ScalarOps<ParamQ> {
  using Field = RatFun;
  static constexpr bool quantum = true;
  static ParamQ from_field(const RatFun& c) { return ParamQ(c); }
  // q raised to basis coroot symbol k.
  static ParamQ symbol_of(int k, int n) {
    IVec e(n, 0);
    e[k] = 1;
    return ParamQ::qpow(e);
  }
  static ParamQ shift(const ParamQ& s, const IVec& nu);
  static ParamQ map_coroots(const ParamQ& s, const std::vector<IVec>& images);
  static RatFun phi(const ParamQ& s, const IVec& lambda);
  static bool is_field_constant(const ParamQ& s) { return s.is_field_constant(); }
  static RatFun field_constant(const ParamQ& s) { return s.field_constant(); }
  static bool is_unit(const ParamQ& s) { return s.is_unit(); }
  static ParamQ inverse(const ParamQ& s) { return s.inverse(); }
  static std::string str(const ParamQ& s, const std::vector<std::string>& names) {
    return s.str(names);
  }
  static bool single_term(const ParamQ& s);
};

// binom(beta + n, k) = (beta+n)(beta+n-1)...(beta+n-k+1)/k!
ParamKM param_binom(const AffineCoroot& b, long k);
// [beta + n]_{q^d}
ParamQ param_qint(const AffineCoroot& b, long d);
// q-binomial [beta + n choose k]_{q^d}
ParamQ param_qbinom(const AffineCoroot& b, long k, long d);
// q^{d (beta + n)}
ParamQ param_qpow(const AffineCoroot& b, long d);

}  // namespace qtau
