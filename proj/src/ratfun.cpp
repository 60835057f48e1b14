#include "qtau/ratfun.hpp"
#include "qtau/format.hpp"

namespace qtau {

namespace {

int low_degree(const QPoly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeffs()[k].is_zero()) return k;
  return -1;
}

bool is_power_of_var(const QPoly& p) { return !p.is_zero() && low_degree(p) == p.degree(); }

QPoly drop_low(const QPoly& p, int k) {
  std::vector<Rational> v(p.coeffs().begin() + k, p.coeffs().end());
  return QPoly(std::move(v));
}

}  // namespace

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFun RatFun::qpow(long n) {
  if (n >= 0) return RatFun(QPoly::monomial(Rational(1), static_cast<int>(n)), QPoly(1));
  return RatFun(QPoly(1), QPoly::monomial(Rational(1), static_cast<int>(-n)));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    if (is_power_of_var(den_)) {
      int k = std::min(low_degree(num_), den_.degree());
      if (k > 0) {
        num_ = drop_low(num_, k);
        den_ = drop_low(den_, k);
      }
    } else if (int k = low_degree(den_); divmod(num_, drop_low(den_, k)).second.is_zero()) {
      num_ = divmod(num_, drop_low(den_, k)).first;
      den_ = QPoly::monomial(Rational(1), k);
      normalize();
      return;
    } else {
      QPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
  }
  if (den_.lead() != 1) {
    Rational inv = Rational(1) / den_.lead();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

bool RatFun::is_laurent() const { return is_power_of_var(den_); }

bool RatFun::is_laurent_monomial() const { return is_laurent() && is_power_of_var(num_); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

Rational RatFun::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

std::string RatFun::str() const {
  if (is_laurent()) {
    int s = den_.degree();
    std::vector<SignedTerm> terms;
    for (int k = num_.degree(); k >= 0; --k)
      if (!num_.coeffs()[k].is_zero())
        terms.push_back(coef_term(num_.coeffs()[k], power_str("q", k - s)));
    return join_terms(terms);
  }
  return "(" + to_string(num_, "q") + ")/(" + to_string(den_, "q") + ")";
}

RatFun qint(long n, long d) {
  // (q^{dn} - q^{-dn}) / (q^d - q^{-d})
  RatFun top = RatFun::qpow(d * n) - RatFun::qpow(-d * n);
  RatFun bot = RatFun::qpow(d) - RatFun::qpow(-d);
  return top / bot;
}

RatFun qfactorial(long k, long d) {
  RatFun out(1);
  for (long j = 1; j <= k; ++j) out *= qint(j, d);
  return out;
}

RatFun qbinom(long n, long k, long d) {
  if (k < 0) throw std::invalid_argument("q-binomial with negative k");
  RatFun out(1);
  for (long j = 0; j < k; ++j) out *= qint(n - j, d);
  return out / qfactorial(k, d);
}

}  // namespace qtau
