#pragma once

#include "qtau/cartan.hpp"
#include "qtau/ncalg.hpp"
#include "qtau/scalars.hpp"
#include "qtau/upoly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qtau {

// Polynomial in x with parameter-polynomial coefficients.
using XPoly = UPoly<ParamKM>;

// Rational function N(x)/D(x): N in ParamKM[x], D in Q[x] monic, and D
// coprime to every Q[x]-component of N.
class RatX {
 public:
  RatX() : num_(), den_(1) {}
  RatX(const ParamKM& c) : num_(c), den_(1) {}
  RatX(XPoly num, QPoly den);

  static RatX x() { return RatX(XPoly::x(), QPoly(1)); }
  static RatX from_qpoly(const QPoly& p);

  const XPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Numerator has only rational coefficients.
  bool is_parameter_free() const;
  int num_degree() const { return num_.degree(); }

  friend RatX operator+(const RatX& a, const RatX& b);
  friend RatX operator-(const RatX& a) { return RatX(-a.num_, a.den_); }
  friend RatX operator-(const RatX& a, const RatX& b) { return a + (-b); }
  friend RatX operator*(const RatX& a, const RatX& b);
  friend bool operator==(const RatX& a, const RatX& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  RatX derivative() const;
  RatX inverse() const;  // only for parameter-free values
  RatX map_scalars(const std::function<ParamKM(const ParamKM&)>& f) const;

  std::string str(const std::vector<std::string>& names) const;
  // True when the printed form is a single product (no top-level sum).
  bool is_single_term() const;

 private:
  void normalize();
  XPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatX& r) { return r.is_zero(); }

class WeylRealization;

// Element sum_k r_k(x) d^k of the localized Weyl algebra.
class WeylElem {
 public:
  using Scalar = ParamKM;
  using Realization = WeylRealization;
  using Terms = std::map<long, RatX, std::greater<long>>;

  WeylElem() = default;
  explicit WeylElem(std::shared_ptr<const WeylRealization> r) : r_(std::move(r)) {}

  const WeylRealization& realization() const { return *r_; }
  const std::shared_ptr<const WeylRealization>& realization_ptr() const { return r_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void accumulate(long k, const RatX& r);

  WeylElem& operator+=(const WeylElem& o) {
    for (auto& [k, r] : o.t_) accumulate(k, r);
    return *this;
  }
  WeylElem& operator-=(const WeylElem& o) {
    for (auto& [k, r] : o.t_) accumulate(k, -r);
    return *this;
  }
  friend WeylElem operator+(WeylElem a, const WeylElem& b) { return a += b; }
  friend WeylElem operator-(WeylElem a, const WeylElem& b) { return a -= b; }
  friend WeylElem operator-(WeylElem a) {
    for (auto& [k, r] : a.t_) r = -r;
    return a;
  }
  friend WeylElem operator*(const ParamKM& s, const WeylElem& a) {
    WeylElem out(a.r_);
    for (auto& [k, r] : a.t_) out.accumulate(k, RatX(s) * r);
    return out;
  }
  friend WeylElem operator*(const WeylElem& a, const WeylElem& b);
  WeylElem& operator*=(const WeylElem& o) { return *this = *this * o; }
  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.t_ == b.t_; }

 private:
  std::shared_ptr<const WeylRealization> r_;
  Terms t_;
};

// The Weyl algebra C[x,d] as a quotient of U(n_-) for a given GCM, with the
// generators f_i assigned to explicit elements.
class WeylRealization : public std::enable_shared_from_this<WeylRealization> {
 public:
  using Elem = WeylElem;

  WeylRealization(RootDatum rd, std::string name) : rd_(std::move(rd)), name_(std::move(name)) {}

  // type: D4_1, B3_1, A3_1, G2_1, A2_1, D5_2, C2_1, A2_2, A1_1 or A2 (f1 = x, f2 = d).
  // consts holds the values of a, b (or a_0, a_1, a_3, a_4 for D4_1).
  static std::shared_ptr<WeylRealization> make(const std::string& type, std::vector<Rational> consts = {});
  static std::vector<std::string> known_types();

  const RootDatum& datum() const { return rd_; }
  const std::string& name() const { return name_; }
  int rank() const { return rd_.rank(); }

  Elem zero() const { return Elem(shared_from_this()); }
  Elem scalar(const ParamKM& s) const;
  Elem one() const { return scalar(ParamKM(1)); }
  Elem x() const;
  Elem d() const;
  Elem term(const RatX& r, long k) const;
  Elem gen(int i) const { return gens_.at(i); }
  Elem gen_pow(int i, long n) const { return power(gens_.at(i), n); }

  Elem multiply(const Elem& a, const Elem& b) const;
  Elem power(const Elem& a, long n) const;
  Elem inverse(const Elem& a) const;
  Elem ad(int i, const Elem& a) const { return multiply(gen(i), a) - multiply(a, gen(i)); }
  Elem ad_pow(int i, long k, Elem a) const {
    for (long s = 0; s < k; ++s) a = ad(i, a);
    return a;
  }

  // f_i^{exp} a f_i^{-exp}: images of x and d by the closed expansion
  // (ad f_i locally nilpotent on them), extended as a homomorphism.
  Elem conjugate(const Elem& a, int i, const AffineCoroot& exp) const;
  Elem map_xd(const Elem& a, const Elem& ximg, const Elem& dimg) const;
  Elem map_scalars(const Elem& a, const std::function<ParamKM(const ParamKM&)>& f) const;

  std::string str(const Elem& a) const;
  bool is_regular(const Elem& a, std::string* witness) const;

 private:
  friend struct WeylRealizationBuilder;
  RootDatum rd_;
  std::string name_;
  std::vector<Elem> gens_;
};

std::vector<SerrePairResult> serre_check(const WeylRealization& r);

inline std::string to_string(const WeylElem& a) { return a.realization().str(a); }

}  // namespace qtau
