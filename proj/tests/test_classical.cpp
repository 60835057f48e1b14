#include "common.hpp"
#include "doctest.h"
#include "qtau/classical.hpp"
#include "qtau/ncalg.hpp"
#include "qtau/weylaction.hpp"

using namespace qtau;
using namespace fixtures;

namespace {

QMPoly x(int k) { return QMPoly::var(k); }

// Coroot symbols transported by w^-1, leaving f_j fixed.
Frac transport(const ClassicalAction& act, const WeylWord& w, const Frac& a) {
  const RootDatum& rd = act.datum();
  std::vector<Frac> images;
  for (int j = 0; j < rd.rank(); ++j) images.push_back(act.f(j));
  for (int k = 0; k < rd.lattice_rank(); ++k)
    images.push_back(act.coroot(weyl_act_coroot(rd, inverse_word(w), unit(rd.lattice_rank(), k))));
  return a.num().substitute<Frac>(images, Frac(1)) / a.den().substitute<Frac>(images, Frac(1));
}

std::vector<Frac> generators(const ClassicalAction& act) {
  std::vector<Frac> out;
  for (int j = 0; j < act.rank(); ++j) out.push_back(act.f(j));
  for (int k = 0; k < act.datum().lattice_rank(); ++k) out.push_back(act.coroot(unit(act.datum().lattice_rank(), k)));
  return out;
}

}  // namespace

TEST_CASE("multivariate gcd and reduced fractions") {
  QMPoly a = (x(0) + x(1)) * (x(0) - x(1)) * (x(2) + 1);
  QMPoly b = (x(0) + x(1)).pow(2) * (x(2) + 1) * x(1);
  CHECK(poly_gcd(a, b) == (x(0) + x(1)) * (x(2) + 1));
  CHECK(poly_gcd(x(0) * x(1) + 1, x(0)) == QMPoly(1));
  CHECK(poly_gcd(QMPoly(), Rational(3) * x(1)) == x(1));
  CHECK(exact_div(a, x(2) + 1) == (x(0) + x(1)) * (x(0) - x(1)));
  CHECK_THROWS_AS(exact_div(a, x(1)), CheckFailure);

  Frac f(a, b);
  CHECK(f.num() == x(0) - x(1));
  CHECK(f.den() == x(0) * x(1) + x(1) * x(1));
  CHECK(Frac(Rational(2) * x(0), Rational(4) * x(0) * x(1)) == Frac(QMPoly(1), Rational(2) * x(1)));
  CHECK(f * Frac(b) == Frac(a));
  CHECK(f - f == Frac());
  CHECK((Frac(x(0)) + Frac(1) / Frac(x(1))).str({"u", "v"}) == "(u v + 1)/v");
  CHECK(Frac(x(0)).pow(-2) * Frac(x(0)).pow(3) == Frac(x(0)));
}

TEST_CASE("simple reflections on generators and tau-monomials") {
  for (const IMat& a : {A2, B2, G2, A3}) {
    ClassicalAction act(datum(a));
    const RootDatum& rd = act.datum();
    const IMat& c = act.brackets();
    for (int i = 0; i < rd.rank(); ++i) {
      Frac bi = act.coroot(rd.coroots[i]);
      CHECK(act.apply(i, act.f(i)) == act.f(i));
      CHECK(act.apply(i, bi) == Frac(-1) * bi);
      for (int j = 0; j < rd.rank(); ++j)
        if (j != i) CHECK(act.apply(i, act.f(j)) == act.f(j) + Frac(Rational(c[i][j])) * bi / act.f(i));
      for (const IVec& nu : {rd.fundamentals[0], add(rd.fundamentals[i], rd.roots[0], -2)}) {
        auto t = act.apply(i, act.tau(nu));
        long h = rd.pair(rd.coroots[i], nu);
        CHECK(t.cocycle == act.f(i).pow(h));
        CHECK(t.nu == add(nu, rd.roots[i], -h));
      }
    }
  }
}

TEST_CASE("involution and braid relations") {
  for (const IMat& a : {A2, B2, G2, A3}) {
    ClassicalAction act(datum(a));
    const RootDatum& rd = act.datum();
    auto gens = generators(act);
    ClassicalTau t{act.f(0) + act.coroot(rd.coroots[rd.rank() - 1]), add(rd.fundamentals[0], rd.rho())};
    for (int i = 0; i < rd.rank(); ++i) {
      for (auto& g : gens) CHECK(act.apply(i, act.apply(i, g)) == g);
      CHECK(act.apply_word({i, i}, t) == t);
      for (int j = i + 1; j < rd.rank(); ++j) {
        WeylWord u, v;
        for (int k = 0; k < braid_order(rd, i, j); ++k) {
          u.push_back(k % 2 ? j : i);
          v.push_back(k % 2 ? i : j);
        }
        CAPTURE(i);
        CAPTURE(j);
        CHECK(act.apply_word(u, t) == act.apply_word(v, t));
        for (auto& g : gens) {
          ClassicalTau x{g, rd.zero()};
          CHECK(act.apply_word(u, x) == act.apply_word(v, x));
        }
      }
    }
  }
}

TEST_CASE("A3 cocycles match the quantum X_1 ... X_6 after transport") {
  ClassicalAction act(datum(A3));
  WeylAction<ConstCommutator> q(ConstCommutator::make(act.datum()));
  Frac f1 = act.f(0), f2 = act.f(1), f3 = act.f(2);
  Frac b1 = act.coroot({1, 0, 0}), b2 = act.coroot({0, 1, 0}), b3 = act.coroot({0, 0, 1});
  const std::vector<Frac> X = {
      f1,
      f1 * f2 + b1 + b2,
      f1 * f2 * f3 + (b1 + b2 + b3) * f1 + (b1 + b2) * f3,
      f1 * f2 * f3 + (b1 + b2 + b3) * f1 + b1 * f3,
      f1 * f2 * f3 + b1 * f1 + (b1 + b2 + b3) * f3,
      f1 * f2 * f3 + b1 * f1 + (b1 + b2) * f3,
  };
  const WeylWord word{0, 1, 2, 0, 1, 0};
  for (std::size_t k = 1; k <= word.size(); ++k) {
    WeylWord w(word.begin(), word.begin() + k);
    auto t = act.tau_function(w, act.datum().fundamentals[0]);
    CAPTURE(k);
    CHECK(transport(act, w, t.cocycle) == X[k - 1]);
    CHECK(act.commutative_image(q.phi_psi_prefactor(w, act.datum().fundamentals[0])) == X[k - 1]);
    CHECK(t.nu == weyl_act_weight(act.datum(), w, act.datum().fundamentals[0]));
  }
  CHECK(act.str(act.tau_function({0, 1}, {1, 0, 0})) == "(f1 f2 - b2) * tau[0,-1,1]");
}

TEST_CASE("classical cocycles are leading parts of quantum prefactors") {
  for (const IMat& a : {A2, B2, A3}) {
    auto rd = datum(a);
    ClassicalAction act(rd);
    WeylAction<ConstCommutator> q(ConstCommutator::make(rd));
    for (const WeylWord& w : reduced_words(rd, 3))
      for (const IVec& mu : {rd.fundamentals[0], rd.fundamentals[rd.rank() - 1]}) {
        auto t = q.tau_function(w, mu);
        auto x = q.tilde(inverse_word(w), t.prefactor);
        CAPTURE(q.realization().str(x));
        CAPTURE(act.str(transport(act, w, act.tau_function(w, mu).cocycle)));
        Frac cl = transport(act, w, act.tau_function(w, mu).cocycle);
        Frac qi = act.commutative_image(x);
        REQUIRE(cl.is_polynomial());
        REQUIRE(qi.is_polynomial());
        // Ordering corrections lower the degree in (f, b) by two.
        QMPoly diff = qi.num() - cl.num();
        CHECK(qi.num().total_degree() == cl.num().total_degree());
        if (!diff.is_zero()) CHECK(diff.total_degree() <= cl.num().total_degree() - 2);
      }
  }
}

TEST_CASE("classical tau-functions are polynomial") {
  for (const IMat& a : {A2, B2, G2, A3}) {
    ClassicalAction act(datum(a));
    const RootDatum& rd = act.datum();
    for (const WeylWord& w : reduced_words(rd, 4))
      for (const IVec& mu : {rd.fundamentals[0], rd.fundamentals[rd.rank() - 1], rd.rho()}) {
        auto t = act.tau_function(w, mu);
        CAPTURE(act.str(t));
        CHECK(t.cocycle.is_polynomial());
        CHECK(t.nu == weyl_act_weight(rd, w, mu));
      }
  }
}

TEST_CASE("classical tau-function input errors") {
  ClassicalAction act(datum(A2));
  CHECK_THROWS_AS(act.tau_function({0, 0}, {1, 0}), InputError);
  CHECK_THROWS_AS(act.tau_function({0}, {-1, 0}), InputError);
  CHECK_THROWS_AS(act.tau_function({0}, {1, 0, 0}), InputError);
  CHECK_THROWS_AS(act.tau_function({2}, {1, 0}), InputError);
}

TEST_CASE("Okamoto polynomials") {
  auto seq = okamoto_seq(8);
  REQUIRE(seq.size() == 9);
  QPoly xx = QPoly::x() * QPoly::x();
  CHECK(seq[0].q == QPoly(1));
  CHECK(seq[1].q == QPoly(1));
  CHECK(seq[2].q == xx + QPoly(1));
  for (auto& s : seq) {
    CAPTURE(s.m);
    CHECK(s.exact);
    CHECK(s.q.degree() == s.m * (s.m - 1));
    for (auto& c : s.q.coeffs()) CHECK(boost::multiprecision::denominator(c) == 1);
    for (std::size_t k = 1; k < s.q.coeffs().size(); k += 2) CHECK(s.q.coeffs()[k].is_zero());
  }
  // Independent recomputation with the next step written out.
  for (long m = 1; m + 1 < static_cast<long>(seq.size()); ++m) {
    const QPoly& q = seq[m].q;
    QPoly rhs = q.derivative().derivative() * q - q.derivative() * q.derivative() +
                (xx + QPoly(Rational(2 * m - 1))) * q * q;
    CHECK(seq[m - 1].q * seq[m + 1].q == rhs);
  }
  CHECK_THROWS_AS(okamoto_seq(0), InputError);
}
