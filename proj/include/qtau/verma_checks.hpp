#pragma once

#include "qtau/verma.hpp"
#include "qtau/weylaction.hpp"

namespace qtau {

inline std::string coords_str(const IVec& v) {
  std::string o;
  for (std::size_t k = 0; k < v.size(); ++k) o += (k ? "," : "") + std::to_string(v[k]);
  return o;
}

inline std::string instance_str(const RootDatum& rd, const WeylWord& w, const IVec& lambda, const IVec& mu) {
  std::string s = "w=(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + rd.labels[w[k]];
  return s + ") lambda=(" + coords_str(lambda) + ") mu=(" + coords_str(mu) + ")";
}

// Singularity of F_{w,lambda} v_lambda and F_{w,lambda+mu} v_{lambda+mu}, and
// F_{w,lambda+mu} = P F_{w,lambda} in the quotient.
template <class F>
CheckReport verma_instance_check(SerreQuotient<F>& u, const WeylWord& w, const IVec& lambda, const IVec& mu,
                                 Division<F>* division = nullptr) {
  const RootDatum& rd = u.datum();
  CheckReport rep;
  rep.name = instance_str(rd, w, lambda, mu);
  IVec lm = add(lambda, mu);
  auto small = u.word(F_w_lambda(rd, w, lambda));
  auto big = u.word(F_w_lambda(rd, w, lm));
  int bad = -1;
  bool s1 = is_singular(u, lambda, small, &bad);
  rep.add("F_{w,lambda} v_lambda is singular", s1, s1 ? "" : "e" + rd.labels[bad] + " does not kill it");
  bool s2 = is_singular(u, lm, big, &bad);
  rep.add("F_{w,lambda+mu} v_{lambda+mu} is singular", s2, s2 ? "" : "e" + rd.labels[bad] + " does not kill it");
  auto div = divide_right(u, big, small);
  rep.add("F_{w,lambda+mu} in U_- F_{w,lambda}", div.found, div.found ? "P = " + u.str(div.quotient) : "no solution");
  if (div.found)
    rep.info("quotient is unique", div.nullity == 0, "solution space dimension " + std::to_string(div.nullity));
  if (division) *division = div;
  return rep;
}

// sigma(phi_{lambda+rho}(Phi_n)) = F_{w,lambda}, sigma(phi_{lambda+rho}(Psi_n))
// = F_{w,lambda+mu}, and phi_{lambda+rho}(Phi_n^{-1} Psi_n) = sigma(P) in the
// realization, where P is the quotient found by divide_right.
template <class R>
CheckReport sigma_phi_crosscheck(const WeylAction<R>& act, SerreQuotient<typename ScalarOps<typename R::Elem::Scalar>::Field>& u,
                                 const WeylWord& w, const IVec& lambda, const IVec& mu) {
  using S = typename R::Elem::Scalar;
  using Ops = ScalarOps<S>;
  using F = typename Ops::Field;
  const RootDatum& rd = act.datum();
  const R& r = act.realization();
  CheckReport rep;
  rep.name = instance_str(rd, w, lambda, mu);
  IVec shift = add(lambda, rd.rho());

  FWord phi_word, psi_word;
  WeylWord prefix;
  for (int i : w) {
    IVec beta = weyl_act_coroot(rd, inverse_word(prefix), rd.coroots[i]);
    ParamKM b = ParamKM::linear(beta);
    Rational e1 = ScalarOps<ParamKM>::phi(b, shift);
    Rational e2 = ScalarOps<ParamKM>::phi(b + ParamKM(Rational(rd.pair(beta, mu))), shift);
    if (e1 < 0 || e2 < 0) throw InputError("negative specialized exponent");
    phi_word.insert(phi_word.end(), static_cast<long>(e1), i);
    psi_word.insert(psi_word.end(), static_cast<long>(e2), i);
    prefix.push_back(i);
  }
  FWord f_small = F_w_lambda(rd, w, lambda);
  FWord f_big = F_w_lambda(rd, w, add(lambda, mu));
  rep.add("sigma(phi(Phi_n)) = F_{w,lambda}", sigma(phi_word) == f_small,
          word_str(rd, sigma(phi_word)) + " vs " + word_str(rd, f_small));
  rep.add("sigma(phi(Psi_n)) = F_{w,lambda+mu}", sigma(psi_word) == f_big,
          word_str(rd, sigma(psi_word)) + " vs " + word_str(rd, f_big));

  auto e = act.phi_psi_prefactor(w, mu);
  auto spec = r.map_scalars(e, [&](const S& s) { return Ops::from_field(Ops::phi(s, shift)); });
  auto div = divide_right(u, u.word(f_big), u.word(f_small));
  if (!div.found) {
    rep.add("phi(Phi_n^-1 Psi_n) = sigma(P) in the realization", false, "no quotient P");
    return rep;
  }
  auto image = r.zero();
  for (auto& [word, c] : sigma(u.lift(div.quotient))) {
    auto term = r.scalar(Ops::from_field(c));
    for (int i : word) term = r.multiply(term, r.gen(i));
    image += term;
  }
  rep.add("phi(Phi_n^-1 Psi_n) = sigma(P) in the realization", image == spec,
          r.str(spec) + " vs " + r.str(image));
  return rep;
}

inline GradedWord<Rational> at_q_one(const GradedWord<RatFun>& p) {
  GradedWord<Rational> out;
  for (auto& [w, c] : p) {
    Rational v = c.at_one();
    if (!v.is_zero()) out[w] = v;
  }
  return out;
}

// The q-case quotient data at q = 1 against the KM-case data.
inline CheckReport q_limit_check(SerreQuotient<RatFun>& uq, SerreQuotient<Rational>& uk, const WeylWord& w,
                                 const IVec& lambda, const IVec& mu) {
  const RootDatum& rd = uk.datum();
  CheckReport rep;
  rep.name = instance_str(rd, w, lambda, mu);
  FWord f_small = F_w_lambda(rd, w, lambda);
  FWord f_big = F_w_lambda(rd, w, add(lambda, mu));
  IVec ds = word_degree(f_small, rd.rank()), db = word_degree(f_big, rd.rank());
  IVec dp = add(db, ds, -1);
  for (const IVec& d : {ds, db, dp})
    rep.add("basis words agree in degree (" + coords_str(d) + ")", uq.basis(d) == uk.basis(d));

  auto specialize = [&](const SerreQuotient<RatFun>::Elem& v) {
    auto p = at_q_one(uq.lift(v));
    return p.empty() ? uk.zero(v.degree) : uk.reduce(p);
  };
  auto same = [](const SerreQuotient<Rational>::Elem& a, const SerreQuotient<Rational>::Elem& b) {
    return a.degree == b.degree && a.coords == b.coords;
  };
  auto sq = uq.word(f_small), bq = uq.word(f_big);
  auto sk = uk.word(f_small), bk = uk.word(f_big);
  rep.add("F_{w,lambda} specializes", same(specialize(sq), sk));
  rep.add("F_{w,lambda+mu} specializes", same(specialize(bq), bk));
  for (int i = 0; i < rd.rank(); ++i) {
    if (sq.degree[i] == 0) continue;
    IVec probe = lambda;
    probe[i] += 1;
    rep.add("e" + rd.labels[i] + " action specializes",
            same(specialize(uq.e_action(i, probe, sq)), uk.e_action(i, probe, sk)));
  }
  auto pq = divide_right(uq, bq, sq);
  auto pk = divide_right(uk, bk, sk);
  rep.add("both quotients exist", pq.found && pk.found);
  if (pq.found && pk.found) {
    auto lim = specialize(pq.quotient);
    rep.add("P specializes to a KM quotient", same(uk.mul(lim, sk), bk));
    if (pq.nullity == 0 && pk.nullity == 0) rep.add("P specializes to the KM quotient", same(lim, pk.quotient));
  }
  return rep;
}

}  // namespace qtau
