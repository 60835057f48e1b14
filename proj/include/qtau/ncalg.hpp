#pragma once

#include "qtau/cartan.hpp"
#include "qtau/scalars.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qtau {

// Exponent vector of the ordered product f_1^{a_1} ... f_r^{a_r}.
using Mono = std::vector<int>;

struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    return a > b;
  }
};

template <class S>
class FRealization;

// Normal-form element of an f-monomial realization.
template <class S>
class FElem {
 public:
  using Scalar = S;
  using Realization = FRealization<S>;
  using Terms = std::map<Mono, S, MonoOrder>;

  FElem() = default;
  explicit FElem(std::shared_ptr<const Realization> r) : r_(std::move(r)) {}

  const Realization& realization() const { return *r_; }
  const std::shared_ptr<const Realization>& realization_ptr() const { return r_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void accumulate(const Mono& m, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  FElem& operator+=(const FElem& o) {
    for (auto& [m, c] : o.t_) accumulate(m, c);
    return *this;
  }
  FElem& operator-=(const FElem& o) {
    for (auto& [m, c] : o.t_) accumulate(m, S(0) - c);
    return *this;
  }
  friend FElem operator+(FElem a, const FElem& b) { return a += b; }
  friend FElem operator-(FElem a, const FElem& b) { return a -= b; }
  friend FElem operator-(FElem a) {
    for (auto& [m, c] : a.t_) c = S(0) - c;
    return a;
  }
  friend FElem operator*(const S& s, const FElem& a) {
    FElem out(a.r_);
    for (auto& [m, c] : a.t_) out.accumulate(m, s * c);
    return out;
  }
  friend FElem operator*(const FElem& a, const FElem& b) { return a.r_->multiply(a, b); }
  FElem& operator*=(const FElem& o) { return *this = *this * o; }
  friend bool operator==(const FElem& a, const FElem& b) { return a.t_ == b.t_; }

 private:
  std::shared_ptr<const Realization> r_;
  Terms t_;
};

// Shared machinery of ConstCommutator (S = ParamKM) and QCommutator
// (S = ParamQ) realizations.
template <class S>
class FRealization : public std::enable_shared_from_this<FRealization<S>> {
 public:
  using Elem = FElem<S>;
  using Ops = ScalarOps<S>;

  FRealization(RootDatum rd, IMat c, std::string name)
      : rd_(std::move(rd)), c_(std::move(c)), name_(std::move(name)) {}
  virtual ~FRealization() = default;

  const RootDatum& datum() const { return rd_; }
  const IMat& c() const { return c_; }
  const std::string& name() const { return name_; }
  int rank() const { return rd_.rank(); }

  Elem zero() const { return Elem(this->shared_from_this()); }
  Elem scalar(const S& s) const {
    Elem e = zero();
    e.accumulate(Mono(rank(), 0), s);
    return e;
  }
  Elem one() const { return scalar(S(1)); }
  Elem monomial(const Mono& m, const S& s = S(1)) const {
    Elem e = zero();
    e.accumulate(m, s);
    return e;
  }
  Elem gen(int i) const { return gen_pow(i, 1); }
  Elem gen_pow(int i, long n) const {
    Mono m(rank(), 0);
    m[i] = static_cast<int>(n);
    return monomial(m);
  }

  // Product of two ordered monomials as a normal-form element.
  virtual Elem mono_mul(const Mono& a, const Mono& b) const = 0;

  Elem multiply(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (auto& [ma, ca] : a.terms())
      for (auto& [mb, cb] : b.terms()) {
        Elem p = mono_mul(ma, mb);
        S coef = ca * cb;
        for (auto& [m, c] : p.terms()) out.accumulate(m, coef * c);
      }
    return out;
  }

  Elem power(const Elem& a, long n) const {
    if (n < 0) return power(inverse(a), -n);
    Elem out = one();
    for (long k = 0; k < n; ++k) out = multiply(out, a);
    return out;
  }

  // Inverse of a single term with invertible coefficient.
  Elem inverse(const Elem& a) const {
    if (a.terms().size() != 1 || !Ops::is_unit(a.terms().begin()->second))
      throw UnsupportedLocalization("inverse of a sum in the realization");
    auto& [m, c] = *a.terms().begin();
    Elem out = scalar(Ops::inverse(c));
    for (int k = rank() - 1; k >= 0; --k)
      if (m[k] != 0) out = multiply(out, gen_pow(k, -m[k]));
    return out;
  }

  // Weight nu (in P) with the element of weight -nu; throws if not homogeneous.
  IVec weight_of(const Elem& a) const {
    std::optional<IVec> w;
    for (auto& [m, c] : a.terms()) {
      IVec nu = rd_.zero();
      for (int k = 0; k < rank(); ++k) nu = add(nu, rd_.roots[k], m[k]);
      if (w && *w != nu) throw InputError("element is not weight-homogeneous");
      w = nu;
    }
    return w ? *w : rd_.zero();
  }

  // (ad f_i)(a)
  virtual Elem ad(int i, const Elem& a) const = 0;

  Elem ad_pow(int i, long k, Elem a) const {
    if (k < 0) throw std::invalid_argument("negative ad power");
    for (long s = 0; s < k; ++s) a = ad(i, a);
    return a;
  }

  // f_i^{exp} f_j f_i^{-exp} by the closed finite expansion.
  virtual Elem conj_generator(int i, const AffineCoroot& exp, int j) const = 0;

  // Algebra homomorphism f_k -> images[k], applied to a.
  Elem map_generators(const Elem& a, const std::vector<Elem>& images) const {
    std::vector<std::optional<Elem>> inverses(rank());
    Elem out = zero();
    for (auto& [m, c] : a.terms()) {
      Elem term = scalar(c);
      for (int k = 0; k < rank(); ++k) {
        if (m[k] == 0) continue;
        if (m[k] < 0 && !inverses[k]) inverses[k] = inverse(images[k]);
        const Elem& base = m[k] > 0 ? images[k] : *inverses[k];
        for (int s = 0; s < std::abs(m[k]); ++s) term = multiply(term, base);
      }
      out += term;
    }
    return out;
  }

  Elem conjugate(const Elem& a, int i, const AffineCoroot& exp) const {
    if (all_zero(exp.beta) && exp.n == 0) return a;
    std::vector<Elem> images;
    for (int j = 0; j < rank(); ++j) images.push_back(conj_generator(i, exp, j));
    return map_generators(a, images);
  }

  Elem map_scalars(const Elem& a, const std::function<S(const S&)>& f) const {
    Elem out = zero();
    for (auto& [m, c] : a.terms()) out.accumulate(m, f(c));
    return out;
  }

  std::string str(const Elem& a) const {
    std::vector<SignedTerm> terms;
    for (auto& [m, c] : a.terms()) {
      std::string mono;
      for (int k = 0; k < rank(); ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += " ";
        mono += power_str("f" + rd_.labels[k], m[k]);
      }
      terms.push_back(product_term(Ops::str(c, rd_.coroot_names), mono));
    }
    return join_terms(terms);
  }

  // Regular means every monomial exponent is nonnegative.
  bool is_regular(const Elem& a, std::string* witness) const {
    for (auto& [m, c] : a.terms())
      for (int x : m)
        if (x < 0) {
          if (witness) *witness = str(monomial(m, c));
          return false;
        }
    return true;
  }

 protected:
  RootDatum rd_;
  IMat c_;
  std::string name_;
};

using KMElem = FElem<ParamKM>;
using QElem = FElem<ParamQ>;

// [f_i, f_j] = c_ij central, c skew-symmetric.
class ConstCommutator : public FRealization<ParamKM> {
 public:
  using FRealization::FRealization;
  static std::shared_ptr<ConstCommutator> make(const RootDatum& rd, std::optional<IMat> c = {});
  Elem mono_mul(const Mono& a, const Mono& b) const override;
  Elem ad(int i, const Elem& a) const override;
  Elem conj_generator(int i, const AffineCoroot& exp, int j) const override;

 private:
  void times_power(Mono m, int i, long e, const Rational& coef, std::map<Mono, Rational, MonoOrder>& out) const;
};

// f_j f_i = q^{c_ij} f_i f_j, c skew-symmetric.
class QCommutator : public FRealization<ParamQ> {
 public:
  using FRealization::FRealization;
  static std::shared_ptr<QCommutator> make(const RootDatum& rd, std::optional<IMat> c = {});
  Elem mono_mul(const Mono& a, const Mono& b) const override;
  Elem ad(int i, const Elem& a) const override;
  Elem conj_generator(int i, const AffineCoroot& exp, int j) const override;
};

// Default c_ij = eps_ij d_i a_ij with eps_ij = -1 for i < j and +1 for i > j.
IMat default_commutators(const RootDatum& rd);
// Throws InputError unless c is skew with c_ij = +-d_i a_ij as required.
void check_commutators(const RootDatum& rd, const IMat& c);

struct SerrePairResult {
  int i, j;
  bool pass;
};
template <class S>
std::vector<SerrePairResult> serre_check(const FRealization<S>& r) {
  std::vector<SerrePairResult> out;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j) {
      if (i == j) continue;
      auto v = r.ad_pow(i, 1 - r.datum().cartan[i][j], r.gen(j));
      out.push_back({i, j, v.is_zero()});
    }
  return out;
}

template <class S>
std::string to_string(const FElem<S>& a) {
  return a.realization().str(a);
}

}  // namespace qtau
