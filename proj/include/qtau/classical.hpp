#pragma once

#include "qtau/cartan.hpp"
#include "qtau/mpoly.hpp"
#include "qtau/ncalg.hpp"
#include "qtau/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtau {

// gcd over Q[x_0, x_1, ...] by recursive primitive remainder sequences,
// normalized to leading coefficient 1.
QMPoly poly_gcd(const QMPoly& a, const QMPoly& b);
// a / b; throws CheckFailure when b does not divide a.
QMPoly exact_div(const QMPoly& a, const QMPoly& b);

// Reduced fraction of polynomials with a denominator of leading coefficient 1.
class Frac {
 public:
  Frac() : num_(), den_(1) {}
  Frac(long c) : num_(c), den_(1) {}
  Frac(const Rational& c) : num_(c), den_(1) {}
  Frac(QMPoly p) : num_(std::move(p)), den_(1) {}
  Frac(QMPoly num, QMPoly den);

  const QMPoly& num() const { return num_; }
  const QMPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b);
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b);
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  Frac pow(long e) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  QMPoly num_, den_;
};

// (phi, nu) standing for phi tau^nu.
struct ClassicalTau {
  Frac cocycle;
  IVec nu;
  friend bool operator==(const ClassicalTau& a, const ClassicalTau& b) {
    return a.cocycle == b.cocycle && a.nu == b.nu;
  }
};

// Birational Weyl group action on the Poisson algebra with constant brackets
// {f_i, f_j} = c_ij and central parameters. Variables 0..r-1 are f_i, the
// next ones are the coroot basis symbols.
class ClassicalAction {
 public:
  explicit ClassicalAction(RootDatum rd, std::optional<IMat> c = {});

  const RootDatum& datum() const { return rd_; }
  const IMat& brackets() const { return c_; }
  int rank() const { return rd_.rank(); }
  std::vector<std::string> names() const;

  Frac f(int i) const { return Frac(QMPoly::var(i)); }
  // Coroot vector as a linear form in the parameter symbols.
  Frac coroot(const IVec& beta) const;
  ClassicalTau tau(const IVec& nu) const { return {Frac(1), nu}; }

  Frac apply(int i, const Frac& a) const;
  ClassicalTau apply(int i, const ClassicalTau& t) const;
  ClassicalTau apply_word(const WeylWord& w, ClassicalTau t) const;
  // phi_w(mu) tau^{w(mu)}; InputError unless w is reduced and mu dominant.
  ClassicalTau tau_function(const WeylWord& w, const IVec& mu) const;

  // Ordered monomials of a constant-commutator element read as commutative ones.
  Frac commutative_image(const FElem<ParamKM>& a) const;

  std::string str(const Frac& a) const { return a.str(names()); }
  std::string str(const ClassicalTau& t) const;

 private:
  RootDatum rd_;
  IMat c_;
};

struct OkamotoStep {
  long m;
  QPoly q;
  bool exact;
};

// Q_0 .. Q_{m_max} from Q_{m-1} Q_{m+1} = Q_m'' Q_m - (Q_m')^2 + (x^2 + 2m - 1) Q_m^2.
// The sequence stops at the first step with a nonzero remainder.
std::vector<OkamotoStep> okamoto_seq(long m_max);

}  // namespace qtau
