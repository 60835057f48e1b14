#include "qtau/ncalg.hpp"

namespace qtau {

IMat default_commutators(const RootDatum& rd) {
  int r = rd.rank();
  IMat c(r, IVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) c[i][j] = (i < j ? -1 : 1) * rd.sym[i] * rd.cartan[i][j];
  return c;
}

void check_commutators(const RootDatum& rd, const IMat& c) {
  int r = rd.rank();
  if (static_cast<int>(c.size()) != r) throw InputError("commutator matrix has wrong size");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(c[i].size()) != r) throw InputError("commutator matrix has wrong size");
    for (int j = 0; j < r; ++j) {
      if (c[i][j] != -c[j][i]) throw InputError("commutator matrix is not skew-symmetric");
      long base = rd.sym[i] * rd.cartan[i][j];
      if (i != j && c[i][j] != base && c[i][j] != -base)
        throw InputError("commutator entry must be +-d_i a_ij");
      if (i != j && base != 0 && c[i][j] == 0)
        throw InputError("commutator entry must be nonzero where a_ij is");
    }
  }
}

std::shared_ptr<ConstCommutator> ConstCommutator::make(const RootDatum& rd, std::optional<IMat> c) {
  IMat cm = c ? *c : default_commutators(rd);
  check_commutators(rd, cm);
  return std::make_shared<ConstCommutator>(rd, cm, "cc");
}

void ConstCommutator::times_power(Mono m, int i, long e, const Rational& coef,
                                  std::map<Mono, Rational, MonoOrder>& out) const {
  int j = -1;
  for (int k = rank() - 1; k > i; --k)
    if (m[k] != 0) {
      j = k;
      break;
    }
  auto add_to = [&out](const Mono& key, const Rational& v) {
    auto [it, fresh] = out.try_emplace(key, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  if (j < 0) {
    m[i] += static_cast<int>(e);
    add_to(m, coef);
    return;
  }
  long n = m[j];
  m[j] = 0;
  long c = c_[i][j];
  long kmax = 0;
  if (c != 0) {
    if (n >= 0 && e >= 0)
      kmax = std::min(n, e);
    else if (n >= 0)
      kmax = n;
    else if (e >= 0)
      kmax = e;
    else
      throw UnsupportedLocalization("reordering f" + rd_.labels[j] + "^" + std::to_string(n) + " f" +
                                    rd_.labels[i] + "^" + std::to_string(e) +
                                    " needs an infinite series");
  }
  for (long k = 0; k <= kmax; ++k) {
    Rational w = factorial(k) * binomial(n, k) * binomial(e, k) * pow_int(Rational(-c), k);
    if (w.is_zero()) continue;
    std::map<Mono, Rational, MonoOrder> sub;
    times_power(m, i, e - k, coef * w, sub);
    for (auto& [key, v] : sub) {
      Mono full = key;
      full[j] = static_cast<int>(n - k);
      add_to(full, v);
    }
  }
}

ConstCommutator::Elem ConstCommutator::mono_mul(const Mono& a, const Mono& b) const {
  std::map<Mono, Rational, MonoOrder> cur{{a, Rational(1)}};
  for (int k = 0; k < rank(); ++k) {
    if (b[k] == 0) continue;
    std::map<Mono, Rational, MonoOrder> next;
    for (auto& [m, c] : cur) times_power(m, k, b[k], c, next);
    cur = std::move(next);
  }
  Elem out = zero();
  for (auto& [m, c] : cur) out.accumulate(m, ParamKM(c));
  return out;
}

ConstCommutator::Elem ConstCommutator::ad(int i, const Elem& a) const {
  return multiply(gen(i), a) - multiply(a, gen(i));
}

ConstCommutator::Elem ConstCommutator::conj_generator(int i, const AffineCoroot& exp, int j) const {
  if (i == j) return gen(i);
  Elem out = zero();
  Elem adk = gen(j);
  for (long k = 0; k <= -rd_.cartan[i][j]; ++k) {
    out += param_binom(exp, k) * multiply(adk, gen_pow(i, -k));
    adk = ad(i, adk);
  }
  return out;
}

std::shared_ptr<QCommutator> QCommutator::make(const RootDatum& rd, std::optional<IMat> c) {
  IMat cm = c ? *c : default_commutators(rd);
  check_commutators(rd, cm);
  return std::make_shared<QCommutator>(rd, cm, "qc");
}

QCommutator::Elem QCommutator::mono_mul(const Mono& a, const Mono& b) const {
  long sigma = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) sigma += c_[i][j] * a[j] * b[i];
  Mono m(rank());
  for (int k = 0; k < rank(); ++k) m[k] = a[k] + b[k];
  return monomial(m, ParamQ(RatFun::qpow(sigma)));
}

QCommutator::Elem QCommutator::ad(int i, const Elem& a) const {
  IVec nu = weight_of(a);
  long h = rd_.pair(rd_.coroots[i], nu);
  return multiply(gen(i), a) - ParamQ(RatFun::qpow(rd_.sym[i] * h)) * multiply(a, gen(i));
}

QCommutator::Elem QCommutator::conj_generator(int i, const AffineCoroot& exp, int j) const {
  if (i == j) return gen(i);
  long d = rd_.sym[i];
  long a = rd_.cartan[i][j];
  Elem out = zero();
  Elem adk = gen(j);
  for (long k = 0; k <= -a; ++k) {
    AffineCoroot e{scaled(exp.beta, k + a), (k + a) * (exp.n - k)};
    ParamQ coef = param_qpow(e, d) * param_qbinom(exp, k, d);
    out += coef * multiply(adk, gen_pow(i, -k));
    adk = ad(i, adk);
  }
  return out;
}

}  // namespace qtau
