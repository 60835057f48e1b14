#pragma once

#include "qtau/weylaction.hpp"

#include <memory>
#include <string>

namespace qtau {

// Affine A_{n-1}^(1) lattice: Qv free on (dv, ev1..evn), P dual with basis
// (L0, eps1..epsn). Coordinate 0 is dv / L0, coordinate k is ev_k / eps_k.
// Integer subscripts extend by ev_{k+n} = ev_k - dv, eps_{k+n} = eps_k,
// varpi_{k+n} = varpi_k + varpi_n, Lambda_k = L0 + varpi_k.
struct AffineALattice {
  int n = 0;
  RootDatum rd;

  static AffineALattice make(int n);

  int index(long k) const;  // k mod n in [0, n)
  IVec delta_coroot() const;
  IVec eps_coroot(long k) const;
  IVec eps(long k) const;
  IVec varpi(long k) const;
  IVec Lambda(long k) const;
  // Sum of m_j eps_j for a shift vector (m_1..m_n).
  IVec shift_weight(const IVec& m) const;

  // pi^r on both lattices.
  IVec pi_coroot(IVec v, long r = 1) const;
  IVec pi_weight(IVec v, long r = 1) const;
};

// w pi^r, acting on x as w(pi^r(x)); the word acts first-index-first.
struct ExtendedWeyl {
  WeylWord word;
  long r = 0;
};

ExtendedWeyl compose(const AffineALattice& L, const ExtendedWeyl& a, const ExtendedWeyl& b);  // a after b
ExtendedWeyl inverse(const AffineALattice& L, const ExtendedWeyl& a);
ExtendedWeyl pi_element(long r);
ExtendedWeyl simple_element(const AffineALattice& L, long k);
// T_k = s_{k-1} ... s_1 pi s_{n-1} ... s_k, periodic in k.
ExtendedWeyl translation(const AffineALattice& L, long k);
// T^m = prod_k T_k^{m_k}
ExtendedWeyl translation(const AffineALattice& L, const IVec& m);
IVec act_coroot(const AffineALattice& L, const ExtendedWeyl& e, const IVec& v);
IVec act_weight(const AffineALattice& L, const ExtendedWeyl& e, const IVec& v);
bool same_lattice_map(const AffineALattice& L, const ExtendedWeyl& a, const ExtendedWeyl& b);

using QTau = TauExpr<QElem>;

// Quantum action of type A_{n-1}^(1) in the q-case with f_k f_{k+1} = q^{sign} f_{k+1} f_k.
class HirotaContext {
 public:
  HirotaContext(int n, int sign = 1);

  const AffineALattice& lattice() const { return lat_; }
  const QCommutator& realization() const { return *r_; }
  const WeylAction<QCommutator>& action() const { return *act_; }

  QTau scalar(const ParamQ& s) const { return act_->lift(r_->scalar(s)); }
  QTau tau(long k) const { return act_->tau_monomial(lat_.Lambda(k)); }
  QTau s(long k, const QTau& t) const { return act_->apply_simple(lat_.index(k), t); }
  QTau mul(const QTau& a, const QTau& b) const { return act_->multiply(a, b); }
  QTau pi(const QTau& t, long r = 1) const;
  QTau act(const ExtendedWeyl& e, const QTau& t) const;
  // tau_(nu) through the dominant decomposition nu = w(mu).
  QTau tau_at(const IVec& nu, int cap = 10000) const;
  // tau_k(m) = tau_(Lambda_k + m)
  QTau tau_shifted(long k, const IVec& m) const { return tau_at(add(lat_.Lambda(k), lat_.shift_weight(m))); }
  ParamQ qint(const IVec& beta) const { return param_qint({beta, 0}, 1); }
  bool commutes(const QTau& a, const QTau& b) const { return mul(a, b) == mul(b, a); }

  CheckReport check_lemma(long k) const;
  CheckReport check_translated(long k, const IVec& m) const;
  CheckReport check_translations() const;

 private:
  AffineALattice lat_;
  std::shared_ptr<QCommutator> r_;
  std::unique_ptr<WeylAction<QCommutator>> act_;
};

}  // namespace qtau
