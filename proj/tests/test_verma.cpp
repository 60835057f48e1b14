#include "common.hpp"
#include "doctest.h"
#include "qtau/verma_checks.hpp"

#include <random>
#include <set>

using namespace qtau;
using namespace fixtures;

namespace {

// Positive roots of a finite type in root coordinates, by closing the simple
// roots under reflections.
std::vector<IVec> positive_roots(const RootDatum& rd) {
  std::set<IVec> seen;
  std::vector<IVec> todo;
  for (int i = 0; i < rd.rank(); ++i) todo.push_back(unit(rd.rank(), i));
  while (!todo.empty()) {
    IVec v = todo.back();
    todo.pop_back();
    if (!seen.insert(v).second) continue;
    for (int i = 0; i < rd.rank(); ++i) {
      IVec s = reflect_root(rd, i, v);
      bool pos = true;
      for (long x : s) pos = pos && x >= 0;
      if (pos && !all_zero(s)) todo.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

// Kostant partition function: graded dimension of U(n_-) by PBW.
long kostant(const std::vector<IVec>& roots, std::size_t k, const IVec& d) {
  if (all_zero(d)) return 1;
  if (k == roots.size()) return 0;
  long total = 0;
  IVec rest = d;
  while (true) {
    total += kostant(roots, k + 1, rest);
    rest = add(rest, roots[k], -1);
    for (long x : rest)
      if (x < 0) return total;
  }
}

template <class F>
void check_dims_against_kostant(const IMat& a, long bound) {
  auto rd = datum(a);
  SerreQuotient<F> u(rd, 24);
  auto roots = positive_roots(rd);
  std::vector<IVec> degrees{IVec()};
  for (int i = 0; i < rd.rank(); ++i) {
    std::vector<IVec> next;
    for (auto& d : degrees)
      for (long x = 0; x <= bound; ++x) {
        IVec e = d;
        e.push_back(x);
        next.push_back(e);
      }
    degrees = std::move(next);
  }
  for (auto& d : degrees) {
    CAPTURE(linear_str(d, rd.labels));
    CHECK(u.dim(d) == kostant(roots, 0, d));
  }
}

bool within(const RootDatum& rd, const WeylWord& w, const IVec& l, const IVec& m, int cap) {
  return static_cast<int>(F_w_lambda(rd, w, add(l, m)).size()) <= cap;
}

template <class F>
GradedWord<F> serre_relator(const RootDatum& rd, int i, int j) {
  long n = 1 - rd.cartan[i][j];
  GradedWord<F> out;
  for (long k = 0; k <= n; ++k) {
    FWord w(n - k, i);
    w.push_back(j);
    w.insert(w.end(), k, i);
    F c = VermaField<F>::binom(n, k, rd.sym[i]);
    out[w] = k % 2 ? F(0) - c : c;
  }
  return out;
}

template <class F>
GradedWord<F> sandwich(const FWord& u, const GradedWord<F>& p, const FWord& v) {
  GradedWord<F> out;
  for (auto& [w, c] : p) {
    FWord x = u;
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), v.begin(), v.end());
    out[x] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("quotient dimensions in small degrees") {
  auto a2 = datum(A2);
  SerreQuotient<Rational> u(a2, 12);
  CHECK(u.dim({1, 1}) == 2);
  CHECK(u.basis({1, 1}) == std::vector<FWord>{{0, 1}, {1, 0}});
  CHECK(u.dim({2, 1}) == 2);
  CHECK(free_dimension({2, 1}) == 3);
  SerreQuotient<Rational> u1(datum(A1), 12);
  for (long k = 0; k <= 10; ++k) CHECK(u1.dim({k}) == 1);
}

TEST_CASE("quotient dimensions match the Kostant partition function") {
  check_dims_against_kostant<Rational>(A2, 5);
  check_dims_against_kostant<RatFun>(A2, 4);
  check_dims_against_kostant<Rational>(B2, 5);
  check_dims_against_kostant<RatFun>(B2, 4);
  check_dims_against_kostant<Rational>(G2, 4);
  check_dims_against_kostant<Rational>(A3, 3);
  check_dims_against_kostant<RatFun>(A3, 2);
}

TEST_CASE("reduction annihilates the Serre ideal and is a projection") {
  for (auto a : {A2, B2, G2}) {
    auto rd = datum(a);
    SerreQuotient<Rational> uk(rd, 16);
    SerreQuotient<RatFun> uq(rd, 16);
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      for (FWord l : {FWord{}, FWord{0}, FWord{1, 0}})
        for (FWord r : {FWord{}, FWord{1}, FWord{0, 0}}) {
          CHECK(uk.is_zero(uk.reduce(sandwich(l, serre_relator<Rational>(rd, i, j), r))));
          CHECK(uq.is_zero(uq.reduce(sandwich(l, serre_relator<RatFun>(rd, i, j), r))));
        }
    }
    std::mt19937 gen(7);
    for (int t = 0; t < 20; ++t) {
      FWord w;
      for (int k = 0; k < 6; ++k) w.push_back(static_cast<int>(gen() % 2));
      auto v = uq.word(w);
      auto again = uq.reduce(uq.lift(v));
      CHECK(again.coords == v.coords);
    }
  }
}

TEST_CASE("F_{w,lambda}") {
  auto a2 = datum(A2);
  CHECK(F_w_lambda(a2, {0}, {2, 1}) == FWord{0, 0, 0});
  CHECK(F_w_lambda(a2, {0, 1}, {0, 0}) == FWord{1, 1, 0});
  CHECK(word_str(a2, F_w_lambda(a2, {0, 1}, {0, 0})) == "f2^2 f1");
  CHECK(F_w_lambda(a2, {}, {1, 1}).empty());
  CHECK_THROWS_AS(F_w_lambda(a2, {0, 0}, {0, 0}), InputError);
  CHECK_THROWS_AS(F_w_lambda(a2, {0}, {-1, 0}), InputError);

  SerreQuotient<Rational> uk(a2, 16);
  SerreQuotient<RatFun> uq(a2, 16);
  IVec rho = a2.rho();
  FWord x = F_w_lambda(a2, {0, 1, 0}, rho), y = F_w_lambda(a2, {1, 0, 1}, rho);
  CHECK(x != y);
  CHECK(uk.word(x).coords == uk.word(y).coords);
  CHECK(uq.word(x).coords == uq.word(y).coords);
}

TEST_CASE("sigma reverses words and is an involution") {
  std::mt19937 gen(11);
  for (int t = 0; t < 20; ++t) {
    GradedWord<Rational> p;
    for (int k = 0; k < 4; ++k) {
      FWord w;
      for (int m = 0; m < 5; ++m) w.push_back(static_cast<int>(gen() % 3));
      p[w] = Rational(static_cast<long>(gen() % 7) - 3);
    }
    CHECK(sigma(sigma(p)) == p);
  }
  CHECK(sigma(FWord{0, 1, 1}) == FWord{1, 1, 0});
}

TEST_CASE("e_i action on the Verma module") {
  auto a2 = datum(A2);
  SerreQuotient<Rational> u(a2, 16);
  IVec lambda{3, 1};
  auto v = u.one();
  CHECK(u.is_zero(u.e_action(0, lambda, v)));
  auto fv = u.word({0});
  auto e = u.e_action(0, lambda, fv);
  CHECK(e.coords == std::vector<Rational>{3});
  // e f^n v = n (h - n + 1) f^{n-1} v
  for (long n = 1; n <= 5; ++n) {
    auto r = u.e_action(0, lambda, u.word(FWord(n, 0)));
    REQUIRE(r.coords.size() == 1);
    CHECK(r.coords[0] == Rational(n * (3 - n + 1)));
  }
  CHECK(u.is_zero(u.e_action(0, lambda, u.word(F_w_lambda(a2, {0}, lambda)))));
  CHECK(u.is_zero(u.e_action(1, lambda, u.word(F_w_lambda(a2, {0}, lambda)))));
  CHECK_FALSE(u.is_zero(u.e_action(0, lambda, u.word(FWord(3, 0)))));

  SerreQuotient<RatFun> uq(a2, 16);
  for (long n = 1; n <= 5; ++n) {
    auto r = uq.e_action(0, lambda, uq.word(FWord(n, 0)));
    CHECK(r.coords[0] == qint(n) * qint(3 - n + 1));
  }
}

TEST_CASE("divide_right") {
  auto a2 = datum(A2);
  SerreQuotient<Rational> u(a2, 16);
  auto d = divide_right(u, u.one(), u.one());
  CHECK(d.found);
  CHECK(d.quotient.coords == std::vector<Rational>{1});
  auto s = divide_right(u, u.word(F_w_lambda(a2, {1}, {1, 3})), u.word(F_w_lambda(a2, {1}, {0, 1})));
  CHECK(s.found);
  CHECK(u.str(s.quotient) == "f2^2");
  auto none = divide_right(u, u.word({0, 1}), u.word({0}));
  CHECK_FALSE(none.found);
  auto rep = verma_instance_check(u, {0, 1}, a2.rho(), a2.rho());
  for (auto& it : rep.items) {
    CAPTURE(it.label);
    CHECK(it.status.rfind("fail") == std::string::npos);
  }
  CHECK_THROWS_AS(divide_right(u, u.word({0}), u.word({0, 1})), InputError);
  SerreQuotient<Rational> tiny(a2, 4);
  CHECK_THROWS_AS(tiny.word(FWord(5, 0)), DegreeCapExceeded);
}

TEST_CASE("singularity and divisibility on rank 2 instances") {
  for (auto a : {A2, B2}) {
    auto rd = datum(a);
    SerreQuotient<Rational> uk(rd, 18);
    SerreQuotient<RatFun> uq(rd, 12);
    std::vector<IVec> weights{rd.zero(), rd.fundamentals[0], rd.fundamentals[1], rd.rho()};
    for (auto& w : reduced_words(rd, 3))
      for (auto& l : weights)
        for (auto& m : weights) {
          std::vector<CheckReport> reps{verma_instance_check(uk, w, l, m)};
          if (within(rd, w, l, m, 12)) reps.push_back(verma_instance_check(uq, w, l, m));
          for (auto& rep : reps) {
            CAPTURE(rep.name);
            CHECK(rep.pass());
            CHECK(rep.count("info-fails") == 0);
          }
        }
  }
}

TEST_CASE("sigma phi cross-check against the realizations") {
  for (auto a : {A2, B2}) {
    auto rd = datum(a);
    WeylAction<ConstCommutator> ak(ConstCommutator::make(rd));
    WeylAction<QCommutator> aq(QCommutator::make(rd));
    SerreQuotient<Rational> uk(rd, 18);
    SerreQuotient<RatFun> uq(rd, 12);
    std::vector<IVec> weights{rd.zero(), rd.fundamentals[0], rd.rho()};
    for (auto& w : reduced_words(rd, 3))
      for (auto& l : weights)
        for (auto& m : weights) {
          std::vector<CheckReport> reps{sigma_phi_crosscheck(ak, uk, w, l, m)};
          if (within(rd, w, l, m, 12)) reps.push_back(sigma_phi_crosscheck(aq, uq, w, l, m));
          for (auto& rep : reps) {
            CAPTURE(rep.name);
            for (auto& it : rep.items) {
              CAPTURE(it.label);
              CAPTURE(it.detail);
              CHECK(it.status == "pass");
            }
          }
        }
  }
}

TEST_CASE("sigma phi cross-check for w = s2 s1 at lambda = 0") {
  auto rd = datum(A2);
  WeylAction<ConstCommutator> ak(ConstCommutator::make(rd));
  SerreQuotient<Rational> uk(rd, 12);
  auto rep = sigma_phi_crosscheck(ak, uk, {0, 1}, rd.zero(), rd.zero());
  REQUIRE(rep.items.size() == 3);
  CHECK(rep.items[0].detail == "f2^2 f1 vs f2^2 f1");
  CHECK(rep.pass());
}

TEST_CASE("q = 1 limit of the quotient data") {
  for (auto a : {A2, B2}) {
    auto rd = datum(a);
    SerreQuotient<Rational> uk(rd, 12);
    SerreQuotient<RatFun> uq(rd, 12);
    std::vector<IVec> weights{rd.zero(), rd.fundamentals[1], rd.rho()};
    for (auto& w : reduced_words(rd, 3))
      for (auto& l : weights)
        for (auto& m : weights) {
          if (!within(rd, w, l, m, 12)) continue;
          auto rep = q_limit_check(uq, uk, w, l, m);
          CAPTURE(rep.name);
          for (auto& it : rep.items) {
            CAPTURE(it.label);
            CHECK(it.status == "pass");
          }
        }
  }
}
