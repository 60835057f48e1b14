#include "qtau/weyl_realization.hpp"

namespace qtau {

namespace {

XPoly lift(const QPoly& p) {
  std::vector<ParamKM> v;
  for (auto& c : p.coeffs()) v.emplace_back(c);
  return XPoly(std::move(v));
}

// Q[x]-components of N indexed by parameter monomial.
std::map<Exps, QPoly, GrlexGreater> components(const XPoly& n) {
  std::map<Exps, std::vector<Rational>, GrlexGreater> raw;
  for (int k = 0; k <= n.degree(); ++k)
    for (auto& [e, c] : n.coeffs()[k].terms()) {
      auto& v = raw[e];
      if (static_cast<int>(v.size()) <= k) v.resize(k + 1, Rational(0));
      v[k] = c;
    }
  std::map<Exps, QPoly, GrlexGreater> out;
  for (auto& [e, v] : raw) out.emplace(e, QPoly(v));
  return out;
}

XPoly assemble(const std::map<Exps, QPoly, GrlexGreater>& comps) {
  int deg = -1;
  for (auto& [e, p] : comps) deg = std::max(deg, p.degree());
  std::vector<ParamKM> v(deg + 1);
  for (auto& [e, p] : comps)
    for (int k = 0; k <= p.degree(); ++k) v[k] += ParamKM::monomial(e, p.coeffs()[k]);
  return XPoly(std::move(v));
}

}  // namespace

RatX::RatX(XPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RatX RatX::from_qpoly(const QPoly& p) { return RatX(lift(p), QPoly(1)); }

void RatX::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    auto comps = components(num_);
    QPoly g = den_;
    for (auto& [e, p] : comps) {
      if (g.degree() == 0) break;
      g = gcd(g, p);
    }
    if (g.degree() > 0) {
      for (auto& [e, p] : comps) p = exact_div(p, g);
      num_ = assemble(comps);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.lead() != 1) {
    Rational inv = Rational(1) / den_.lead();
    num_ = ParamKM(inv) * num_;
    den_ = inv * den_;
  }
}

bool RatX::is_parameter_free() const {
  for (auto& c : num_.coeffs())
    if (!c.is_constant()) return false;
  return true;
}

RatX operator+(const RatX& a, const RatX& b) {
  if (a.den_ == b.den_) return RatX(a.num_ + b.num_, a.den_);
  return RatX(a.num_ * lift(b.den_) + b.num_ * lift(a.den_), a.den_ * b.den_);
}

RatX operator*(const RatX& a, const RatX& b) {
  if (a.is_zero() || b.is_zero()) return RatX();
  return RatX(a.num_ * b.num_, a.den_ * b.den_);
}

RatX RatX::derivative() const {
  if (is_polynomial()) return RatX(num_.derivative(), den_);
  return RatX(num_.derivative() * lift(den_) - num_ * lift(den_.derivative()), den_ * den_);
}

RatX RatX::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!is_parameter_free())
    throw UnsupportedLocalization("inverse of a rational function with parameter coefficients");
  std::vector<Rational> v;
  for (auto& c : num_.coeffs()) v.push_back(c.constant());
  return RatX(lift(den_), QPoly(v));
}

RatX RatX::map_scalars(const std::function<ParamKM(const ParamKM&)>& f) const {
  std::vector<ParamKM> v;
  for (auto& c : num_.coeffs()) v.push_back(f(c));
  return RatX(XPoly(std::move(v)), den_);
}

std::string RatX::str(const std::vector<std::string>& names) const {
  std::vector<SignedTerm> terms;
  for (int k = num_.degree(); k >= 0; --k) {
    const ParamKM& c = num_.coeffs()[k];
    if (c.is_zero()) continue;
    terms.push_back(product_term(c.str(names), power_str("x", k)));
  }
  std::string n = join_terms(terms);
  if (is_polynomial()) return n;
  return "(" + n + ")/(" + to_string(den_, "x") + ")";
}

bool RatX::is_single_term() const {
  if (!is_polynomial()) return true;
  int count = 0;
  for (auto& c : num_.coeffs())
    if (!c.is_zero()) count += static_cast<int>(c.terms().size());
  return count <= 1;
}

void WeylElem::accumulate(long k, const RatX& r) {
  if (r.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, r);
  if (!fresh) {
    it->second = it->second + r;
    if (it->second.is_zero()) t_.erase(it);
  }
}

WeylElem operator*(const WeylElem& a, const WeylElem& b) { return a.r_->multiply(a, b); }

WeylElem WeylRealization::scalar(const ParamKM& s) const {
  Elem e = zero();
  e.accumulate(0, RatX(s));
  return e;
}

WeylElem WeylRealization::x() const { return term(RatX::x(), 0); }
WeylElem WeylRealization::d() const { return term(RatX(ParamKM(1)), 1); }

WeylElem WeylRealization::term(const RatX& r, long k) const {
  Elem e = zero();
  e.accumulate(k, r);
  return e;
}

WeylElem WeylRealization::multiply(const Elem& a, const Elem& b) const {
  Elem out = zero();
  for (auto& [k1, r1] : a.terms())
    for (auto& [k2, r2] : b.terms()) {
      // d^{k1} r2 = sum_j C(k1, j) r2^{(j)} d^{k1 - j}
      long jmax;
      if (k1 >= 0)
        jmax = k1;
      else if (r2.is_polynomial())
        jmax = r2.num_degree();
      else
        throw UnsupportedLocalization("negative power of d past a non-polynomial coefficient");
      RatX deriv = r2;
      for (long j = 0; j <= jmax && !deriv.is_zero(); ++j) {
        Rational c = binomial(k1, j);
        if (!c.is_zero()) out.accumulate(k1 + k2 - j, RatX(ParamKM(c)) * r1 * deriv);
        deriv = deriv.derivative();
      }
    }
  return out;
}

WeylElem WeylRealization::power(const Elem& a, long n) const {
  if (n < 0) return power(inverse(a), -n);
  Elem out = one();
  for (long k = 0; k < n; ++k) out = multiply(out, a);
  return out;
}

WeylElem WeylRealization::inverse(const Elem& a) const {
  if (a.terms().size() != 1) throw UnsupportedLocalization("inverse of a composite with d-terms");
  auto& [k, r] = *a.terms().begin();
  if (k == 0) return term(r.inverse(), 0);
  if (r.is_polynomial() && r.num_degree() == 0 && r.num().coeffs()[0].is_constant())
    return term(RatX(ParamKM(Rational(1) / r.num().coeffs()[0].constant())), -k);
  throw UnsupportedLocalization("inverse of a composite with d-terms");
}

WeylElem WeylRealization::map_scalars(const Elem& a, const std::function<ParamKM(const ParamKM&)>& f) const {
  Elem out = zero();
  for (auto& [k, r] : a.terms()) out.accumulate(k, r.map_scalars(f));
  return out;
}

WeylElem WeylRealization::map_xd(const Elem& a, const Elem& ximg, const Elem& dimg) const {
  Elem out = zero();
  std::optional<Elem> dinv;
  for (auto& [k, r] : a.terms()) {
    Elem num = zero();
    Elem xp = one();
    for (int m = 0; m <= r.num().degree(); ++m) {
      if (!r.num().coeffs()[m].is_zero()) num += r.num().coeffs()[m] * xp;
      xp = multiply(xp, ximg);
    }
    Elem den = zero();
    xp = one();
    for (int m = 0; m <= r.den().degree(); ++m) {
      if (!r.den().coeffs()[m].is_zero()) den += ParamKM(r.den().coeffs()[m]) * xp;
      xp = multiply(xp, ximg);
    }
    Elem t = r.is_polynomial() ? num : multiply(num, inverse(den));
    if (k < 0 && !dinv) dinv = inverse(dimg);
    const Elem& base = k >= 0 ? dimg : *dinv;
    for (long s = 0; s < std::abs(k); ++s) t = multiply(t, base);
    out += t;
  }
  return out;
}

WeylElem WeylRealization::conjugate(const Elem& a, int i, const AffineCoroot& exp) const {
  if (all_zero(exp.beta) && exp.n == 0) return a;
  auto image = [&](const Elem& g) {
    Elem out = zero();
    Elem adk = g;
    std::optional<Elem> finv;
    for (long k = 0; !adk.is_zero(); ++k) {
      if (k > 16) throw UnsupportedLocalization("ad f_i is not nilpotent on the Weyl generators");
      if (k == 0) {
        out += adk;
      } else {
        if (!finv) finv = inverse(gen(i));
        out += param_binom(exp, k) * multiply(adk, power(*finv, k));
      }
      adk = ad(i, adk);
    }
    return out;
  };
  return map_xd(a, image(x()), image(d()));
}

std::string WeylRealization::str(const Elem& a) const {
  std::vector<SignedTerm> terms;
  for (auto& [k, r] : a.terms()) {
    std::string s = r.str(rd_.coroot_names);
    std::string mono = power_str("d", k);
    if (!r.is_single_term() && !mono.empty())
      terms.push_back({false, "(" + s + ") " + mono});
    else
      terms.push_back(product_term(s, mono));
  }
  return join_terms(terms);
}

bool WeylRealization::is_regular(const Elem& a, std::string* witness) const {
  for (auto& [k, r] : a.terms())
    if (k < 0 || !r.is_polynomial()) {
      if (witness) *witness = str(term(r, k));
      return false;
    }
  return true;
}

std::vector<std::string> WeylRealization::known_types() {
  return {"D4_1", "B3_1", "A3_1", "G2_1", "A2_1", "D5_2", "C2_1", "A2_2", "A1_1", "A2"};
}

std::shared_ptr<WeylRealization> WeylRealization::make(const std::string& type, std::vector<Rational> consts) {
  struct Spec {
    std::vector<std::string> labels;
    IMat cartan;
    std::size_t nconsts;
  };
  static const std::map<std::string, Spec> specs = {
      {"D4_1",
       {{"0", "1", "2", "3", "4"},
        {{2, 0, -1, 0, 0}, {0, 2, -1, 0, 0}, {-1, -1, 2, -1, -1}, {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}},
        4}},
      {"B3_1",
       {{"0", "1", "2", "3"}, {{2, -1, 0, 0}, {-2, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, 2}},
      {"A3_1",
       {{"0", "1", "2", "3"}, {{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 2, 0}, {-1, -1, 0, 2}}, 2}},
      {"G2_1", {{"0", "1", "2"}, {{2, -1, 0}, {-3, 2, -1}, {0, -1, 2}}, 1}},
      {"A2_1", {{"0", "1", "2"}, {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, 0}},
      {"D5_2", {{"0", "1", "2"}, {{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}, 1}},
      {"C2_1", {{"0", "1", "2"}, {{2, 0, -2}, {0, 2, -2}, {-1, -1, 2}}, 1}},
      {"A2_2", {{"0", "1"}, {{2, -1}, {-4, 2}}, 0}},
      {"A1_1", {{"0", "1"}, {{2, -2}, {-2, 2}}, 0}},
      {"A2", {{"1", "2"}, {{2, -1}, {-1, 2}}, 0}},
  };
  auto it = specs.find(type);
  if (it == specs.end()) throw InputError("unknown Weyl realization type '" + type + "'");
  const Spec& sp = it->second;
  if (consts.empty())
    for (std::size_t k = 0; k < sp.nconsts; ++k) consts.emplace_back(static_cast<long>(k + 1));
  if (consts.size() != sp.nconsts)
    throw InputError("Weyl realization " + type + " takes " + std::to_string(sp.nconsts) + " constants");

  auto r = std::make_shared<WeylRealization>(validate_gcm(sp.cartan, std::nullopt, sp.labels), type);
  auto X = r->x(), D = r->d();
  auto c = [&](std::size_t k) { return r->scalar(ParamKM(consts[k])); };
  auto pw = [&](const WeylElem& e, int n) { return r->power(e, n); };
  std::vector<WeylElem> g;
  if (type == "D4_1") g = {X - c(0), X - c(1), D, X - c(2), X - c(3)};
  if (type == "B3_1") g = {pw(X - c(1), 2), D, X, X - c(0)};
  if (type == "A3_1") g = {D - c(1), D, X, X - c(0)};
  if (type == "G2_1") g = {pw(X - c(0), 3), D, X};
  if (type == "A2_1") g = {D + X, D, X};
  if (type == "D5_2") g = {pw(X - c(0), 2), D, pw(X, 2)};
  if (type == "C2_1") g = {D - c(0), D, pw(X, 2)};
  if (type == "A2_2") g = {pw(X, 4), D};
  if (type == "A1_1") g = {D + pw(X, 2), D};
  if (type == "A2") g = {X, D};
  r->gens_ = std::move(g);
  return r;
}

std::vector<SerrePairResult> serre_check(const WeylRealization& r) {
  std::vector<SerrePairResult> out;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j)
      if (i != j) out.push_back({i, j, r.ad_pow(i, 1 - r.datum().cartan[i][j], r.gen(j)).is_zero()});
  return out;
}

}  // namespace qtau
