#include "qtau/classical.hpp"
#include "qtau/ncalg.hpp"

#include <map>

namespace qtau {

namespace {

using Coeffs = std::map<int, QMPoly>;  // degree in the main variable -> coefficient

Coeffs split(const QMPoly& p, int v) {
  Coeffs out;
  for (auto& [e, c] : p.terms()) {
    Exps rest = e;
    int d = 0;
    if (v < static_cast<int>(rest.size())) {
      d = rest[v];
      rest[v] = 0;
    }
    out[d] += QMPoly::monomial(rest, c);
  }
  return out;
}

QMPoly var_pow(int v, int d) {
  Exps e(v + 1, 0);
  e[v] = d;
  return QMPoly::monomial(e, Rational(1));
}

QMPoly monic(const QMPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.lead_coeff()) * p;
}

QMPoly content(const Coeffs& cs) {
  QMPoly g;
  for (auto& [d, c] : cs) {
    g = poly_gcd(g, c);
    if (g.is_constant()) return QMPoly(1);
  }
  return g;
}

int degree_in(const QMPoly& p, int v) { return p.is_zero() ? -1 : p.degree_in(v); }

// Pseudo-remainder of a by b in the variable v.
QMPoly prem(QMPoly a, const QMPoly& b, int v) {
  int n = degree_in(b, v);
  QMPoly lb = split(b, v).rbegin()->second;
  while (!a.is_zero() && degree_in(a, v) >= n) {
    auto sa = split(a, v);
    int m = sa.rbegin()->first;
    a = lb * a - sa.rbegin()->second * var_pow(v, m - n) * b;
  }
  return a;
}

QMPoly primitive(const QMPoly& p, int v) { return exact_div(p, content(split(p, v))); }

// p with every variable except v set to the integer point pt.
QPoly specialize(const QMPoly& p, int v, const std::vector<long>& pt) {
  std::vector<Rational> c(std::max(degree_in(p, v), 0) + 1);
  for (auto& [e, x] : p.terms()) {
    Rational t = x;
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (static_cast<int>(k) == v) d = e[k];
      else t *= pow_int(Rational(pt[k]), e[k]);
    }
    c[d] += t;
  }
  return QPoly(std::move(c));
}

// Upper bound for the degree in v of gcd(a, b): the degree of the gcd of two
// specializations whose leading coefficients in v survive.
int gcd_degree_bound(const QMPoly& a, const QMPoly& b, int v) {
  int n = std::max(a.num_vars(), b.num_vars());
  for (long seed = 0; seed < 8; ++seed) {
    std::vector<long> pt(n);
    for (int k = 0; k < n; ++k) pt[k] = 3 + 7 * k + 11 * seed + (k * k + seed * k) % 5;
    QPoly sa = specialize(a, v, pt), sb = specialize(b, v, pt);
    if (sa.degree() != degree_in(a, v) || sb.degree() != degree_in(b, v)) continue;
    return gcd(sa, sb).degree();
  }
  return std::min(degree_in(a, v), degree_in(b, v));
}

// The common factor of a and b that is a monomial.
Exps monomial_gcd(const QMPoly& a, const QMPoly& b) {
  Exps m = a.lead_exps();
  for (const QMPoly* p : {&a, &b})
    for (auto& [e, c] : p->terms()) {
      m.resize(std::min(m.size(), e.size()));
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    }
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

bool is_monomial(const QMPoly& p) { return p.terms().size() == 1; }

}  // namespace

QMPoly exact_div(const QMPoly& a, const QMPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  QMPoly q, r = a;
  const Exps& lb = b.lead_exps();
  while (!r.is_zero()) {
    Exps e = r.lead_exps();
    e.resize(std::max(e.size(), lb.size()), 0);
    for (std::size_t k = 0; k < lb.size(); ++k) {
      e[k] -= lb[k];
      if (e[k] < 0) throw CheckFailure("polynomial division left a nonzero remainder");
    }
    QMPoly t = QMPoly::monomial(e, r.lead_coeff() / b.lead_coeff());
    q += t;
    r -= t * b;
  }
  return q;
}

QMPoly poly_gcd(const QMPoly& a, const QMPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return QMPoly(1);
  Exps m = monomial_gcd(a, b);
  if (!m.empty()) {
    QMPoly mono = QMPoly::monomial(m, Rational(1));
    return mono * poly_gcd(exact_div(a, mono), exact_div(b, mono));
  }
  if (is_monomial(a) || is_monomial(b)) return QMPoly(1);
  int v = std::max(a.num_vars(), b.num_vars()) - 1;
  while (degree_in(a, v) <= 0 && degree_in(b, v) <= 0) --v;
  if (degree_in(a, v) <= 0) return poly_gcd(a, content(split(b, v)));
  if (degree_in(b, v) <= 0) return poly_gcd(b, content(split(a, v)));
  if (gcd_degree_bound(a, b, v) == 0) return poly_gcd(content(split(a, v)), content(split(b, v)));
  QMPoly ca = content(split(a, v)), cb = content(split(b, v));
  QMPoly g0 = poly_gcd(ca, cb);
  QMPoly x = exact_div(a, ca), y = exact_div(b, cb);
  if (degree_in(x, v) < degree_in(y, v)) std::swap(x, y);
  while (true) {
    QMPoly r = prem(x, y, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      y = QMPoly(1);
      break;
    }
    x = std::move(y);
    y = primitive(r, v);
  }
  return monic(g0 * y);
}

Frac::Frac(QMPoly num, QMPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = QMPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    QMPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.lead_coeff();
  if (lead != 1) {
    num_ = (Rational(1) / lead) * num_;
    den_ = (Rational(1) / lead) * den_;
  }
}

Frac operator+(const Frac& a, const Frac& b) {
  if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
  return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) {
  if (a.den_ == b.den_) return Frac(a.num_ - b.num_, a.den_);
  return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num_ * b.num_, a.den_ * b.den_); }

Frac operator/(const Frac& a, const Frac& b) {
  if (b.is_zero()) throw std::domain_error("division by zero fraction");
  return Frac(a.num_ * b.den_, a.den_ * b.num_);
}

Frac Frac::pow(long e) const {
  if (e < 0) return (Frac(1) / *this).pow(-e);
  return Frac(num_.pow(static_cast<int>(e)), den_.pow(static_cast<int>(e)));
}

std::string Frac::str(const std::vector<std::string>& names) const {
  std::string n = num_.str(names);
  if (den_.is_constant()) return n;
  std::string d = den_.str(names);
  if (has_top_level_sum(n)) n = "(" + n + ")";
  if (has_top_level_sum(d) || d.find(' ') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

Frac ClassicalAction::commutative_image(const FElem<ParamKM>& a) const {
  std::vector<QMPoly> shift;
  for (int k = 0; k < rd_.lattice_rank(); ++k) shift.push_back(QMPoly::var(rank() + k));
  Frac out;
  for (auto& [m, c] : a.terms()) {
    Frac term(c.substitute(shift));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term = term * f(static_cast<int>(i)).pow(m[i]);
    out = out + term;
  }
  return out;
}

ClassicalAction::ClassicalAction(RootDatum rd, std::optional<IMat> c) : rd_(std::move(rd)) {
  c_ = c ? *c : default_commutators(rd_);
  check_commutators(rd_, c_);
}

std::vector<std::string> ClassicalAction::names() const {
  std::vector<std::string> out;
  for (auto& l : rd_.labels) out.push_back("f" + l);
  for (auto& n : rd_.coroot_names) out.push_back(n);
  return out;
}

Frac ClassicalAction::coroot(const IVec& beta) const {
  QMPoly p;
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (beta[k] != 0) p += QMPoly(Rational(beta[k])) * QMPoly::var(rank() + static_cast<int>(k));
  return Frac(p);
}

// s_i(f_j) = f_j + alpha^v_i c_ij / f_i; higher brackets vanish for constant c.
Frac ClassicalAction::apply(int i, const Frac& a) const {
  std::vector<Frac> images;
  for (int j = 0; j < rank(); ++j) {
    if (j == i || c_[i][j] == 0) {
      images.push_back(f(j));
      continue;
    }
    images.push_back(f(j) + Frac(Rational(c_[i][j])) * coroot(rd_.coroots[i]) / f(i));
  }
  for (int k = 0; k < rd_.lattice_rank(); ++k) {
    IVec e(rd_.lattice_rank(), 0);
    e[k] = 1;
    images.push_back(coroot(reflect_coroot(rd_, i, e)));
  }
  Frac n = a.num().substitute<Frac>(images, Frac(1));
  Frac d = a.den().substitute<Frac>(images, Frac(1));
  return n / d;
}

ClassicalTau ClassicalAction::apply(int i, const ClassicalTau& t) const {
  long h = rd_.pair(rd_.coroots[i], t.nu);
  return {apply(i, t.cocycle) * f(i).pow(h), reflect_weight(rd_, i, t.nu)};
}

ClassicalTau ClassicalAction::apply_word(const WeylWord& w, ClassicalTau t) const {
  check_word(rd_, w);
  for (int i : w) t = apply(i, t);
  return t;
}

ClassicalTau ClassicalAction::tau_function(const WeylWord& w, const IVec& mu) const {
  check_word(rd_, w);
  if (!is_reduced(rd_, w).reduced) throw InputError("word is not reduced");
  if (static_cast<int>(mu.size()) != rd_.lattice_rank()) throw InputError("weight has the wrong dimension");
  if (!is_dominant(rd_, mu)) throw InputError("weight is not dominant");
  return apply_word(w, tau(mu));
}

std::string ClassicalAction::str(const ClassicalTau& t) const {
  std::string p = str(t.cocycle);
  if (has_top_level_sum(p)) p = "(" + p + ")";
  std::string w;
  for (std::size_t k = 0; k < t.nu.size(); ++k) w += (k ? "," : "") + std::to_string(t.nu[k]);
  return p + " * tau[" + w + "]";
}

std::vector<OkamotoStep> okamoto_seq(long m_max) {
  if (m_max < 1) throw InputError("m must be at least 1");
  std::vector<OkamotoStep> out{{0, QPoly(1), true}, {1, QPoly(1), true}};
  QPoly x2 = QPoly::x() * QPoly::x();
  for (long m = 1; m < m_max; ++m) {
    const QPoly& qm = out[m].q;
    const QPoly& prev = out[m - 1].q;
    QPoly d1 = qm.derivative();
    QPoly rhs = qm.derivative().derivative() * qm - d1 * d1 + (x2 + QPoly(Rational(2 * m - 1))) * qm * qm;
    auto [quo, rem] = divmod(rhs, prev);
    out.push_back({m + 1, quo, rem.is_zero()});
    if (!rem.is_zero()) break;
  }
  return out;
}

}  // namespace qtau
