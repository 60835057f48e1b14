#include "qtau/scalars.hpp"

namespace qtau {

ParamQ ParamQ::qpow(const IVec& gamma, const RatFun& c) {
  ParamQ p;
  if (!c.is_zero()) p.t_[trimmed(gamma)] = c;
  return p;
}

RatFun ParamQ::field_constant() const {
  auto it = t_.find(IVec{});
  return it == t_.end() ? RatFun() : it->second;
}

ParamQ ParamQ::inverse() const {
  if (!is_unit()) throw UnsupportedLocalization("inverse of a non-monomial q-parameter scalar");
  auto& [g, c] = *t_.begin();
  return qpow(scaled(g, -1), c.inverse());
}

void ParamQ::accumulate(const IVec& g, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ParamQ& ParamQ::operator+=(const ParamQ& o) {
  for (auto& [g, c] : o.t_) accumulate(g, c);
  return *this;
}

ParamQ& ParamQ::operator-=(const ParamQ& o) {
  for (auto& [g, c] : o.t_) accumulate(g, -c);
  return *this;
}

ParamQ operator*(const ParamQ& a, const ParamQ& b) {
  ParamQ out;
  for (auto& [ga, ca] : a.t_)
    for (auto& [gb, cb] : b.t_) out.accumulate(trimmed(add(ga, gb)), ca * cb);
  return out;
}

std::string ParamQ::str(const std::vector<std::string>& names) const {
  std::vector<SignedTerm> terms;
  // Print from the largest q^gamma exponent down for readability.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const IVec& g = it->first;
    const RatFun& c = it->second;
    std::string mono = g.empty() ? "" : "q^{" + linear_str(g, names) + "}";
    if (c.is_laurent_monomial()) {
      int s = c.den().degree();
      int k = c.num().degree();
      std::string qp = power_str("q", k - s);
      std::string body = qp.empty() ? mono : (mono.empty() ? qp : qp + " " + mono);
      terms.push_back(coef_term(c.num().lead(), body));
    } else if (c.is_laurent()) {
      terms.push_back({false, "(" + c.str() + ")" + (mono.empty() ? "" : " " + mono)});
    } else {
      bool neg = c.num().lead() < 0;
      RatFun a = neg ? -c : c;
      std::string body = a.str();
      if (!mono.empty()) body += " " + mono;
      terms.push_back({neg, body});
    }
  }
  return join_terms(terms);
}

ParamKM ScalarOps<ParamKM>::shift(const ParamKM& s, const IVec& nu) {
  if (all_zero(nu)) return s;
  std::vector<ParamKM> images;
  for (std::size_t k = 0; k < nu.size(); ++k)
    images.push_back(ParamKM::var(static_cast<int>(k)) + ParamKM(nu[k]));
  return s.substitute(images);
}

ParamKM ScalarOps<ParamKM>::map_coroots(const ParamKM& s, const std::vector<IVec>& images) {
  std::vector<ParamKM> im;
  for (auto& v : images) im.push_back(ParamKM::linear(v));
  return s.substitute(im);
}

Rational ScalarOps<ParamKM>::phi(const ParamKM& s, const IVec& lambda) {
  std::vector<Rational> at;
  for (long x : lambda) at.emplace_back(x);
  at.resize(std::max<std::size_t>(at.size(), s.num_vars()), Rational(0));
  return s.eval(at);
}

ParamKM ScalarOps<ParamKM>::inverse(const ParamKM& s) {
  if (!is_unit(s)) throw UnsupportedLocalization("inverse of a non-constant parameter polynomial");
  return ParamKM(Rational(1) / s.constant());
}

ParamQ ScalarOps<ParamQ>::shift(const ParamQ& s, const IVec& nu) {
  if (all_zero(nu)) return s;
  ParamQ out;
  for (auto& [g, c] : s.terms()) out += ParamQ::qpow(g, c * RatFun::qpow(dot(g, nu)));
  return out;
}

ParamQ ScalarOps<ParamQ>::map_coroots(const ParamQ& s, const std::vector<IVec>& images) {
  ParamQ out;
  for (auto& [g, c] : s.terms()) {
    IVec img;
    for (std::size_t k = 0; k < g.size(); ++k) img = add(img, images.at(k), g[k]);
    out += ParamQ::qpow(img, c);
  }
  return out;
}

RatFun ScalarOps<ParamQ>::phi(const ParamQ& s, const IVec& lambda) {
  RatFun out;
  for (auto& [g, c] : s.terms()) out += c * RatFun::qpow(dot(g, lambda));
  return out;
}

bool ScalarOps<ParamQ>::single_term(const ParamQ& s) {
  return s.terms().size() <= 1 && (s.is_zero() || s.terms().begin()->second.is_laurent_monomial());
}

ParamKM param_binom(const AffineCoroot& b, long k) {
  if (k < 0) throw std::invalid_argument("binomial with negative k");
  ParamKM out(1);
  for (long j = 0; j < k; ++j) out = out * ParamKM::linear(b.beta, b.n - j);
  return Rational(1) / factorial(k) * out;
}

ParamQ param_qpow(const AffineCoroot& b, long d) {
  return ParamQ::qpow(scaled(b.beta, d), RatFun::qpow(d * b.n));
}

ParamQ param_qint(const AffineCoroot& b, long d) {
  AffineCoroot neg{scaled(b.beta, -1), -b.n};
  RatFun bot = RatFun::qpow(d) - RatFun::qpow(-d);
  return (param_qpow(b, d) - param_qpow(neg, d)) * ParamQ(bot.inverse());
}

ParamQ param_qbinom(const AffineCoroot& b, long k, long d) {
  if (k < 0) throw std::invalid_argument("q-binomial with negative k");
  ParamQ out(1);
  for (long j = 0; j < k; ++j) out *= param_qint({b.beta, b.n - j}, d);
  return out * ParamQ(qfactorial(k, d).inverse());
}

}  // namespace qtau
