#include "doctest.h"
#include "qtau/hirota.hpp"

using namespace qtau;

namespace {

void require_pass(const CheckReport& rep) {
  for (auto& it : rep.items) {
    CAPTURE(rep.name);
    CAPTURE(it.label);
    CAPTURE(it.detail);
    CHECK((it.status == "pass" || it.status.rfind("info", 0) == 0));
  }
}

}  // namespace

TEST_CASE("affine A lattice") {
  for (int n : {3, 4, 5}) {
    auto L = AffineALattice::make(n);
    IVec sum(n + 1, 0), rsum(n + 1, 0);
    for (int k = 0; k < n; ++k) {
      sum = add(sum, L.rd.coroots[k]);
      rsum = add(rsum, L.rd.roots[k]);
      CHECK(L.rd.pair(L.rd.coroots[k], L.varpi(n)) == 0);
      for (int l = -n; l < 2 * n; ++l)
        CHECK(L.rd.pair(L.rd.coroots[k], L.Lambda(l)) == (L.index(l) == k ? 1 : 0));
    }
    CHECK(sum == L.delta_coroot());
    CHECK(all_zero(rsum));
    CHECK(L.pi_weight(L.Lambda(0)) == L.Lambda(1));
    for (long k = -2 * n; k <= 2 * n; ++k) {
      CHECK(L.eps_coroot(k + n) == add(L.eps_coroot(k), L.delta_coroot(), -1));
      CHECK(L.varpi(k + n) == add(L.varpi(k), L.varpi(n)));
      CHECK(L.pi_coroot(L.eps_coroot(k)) == L.eps_coroot(k + 1));
      CHECK(L.pi_weight(L.eps(k)) == L.eps(k + 1));
      CHECK(L.pi_weight(L.Lambda(k)) == L.Lambda(k + 1));
      CHECK(L.pi_coroot(L.pi_coroot(L.eps_coroot(k)), -1) == L.eps_coroot(k));
      CHECK(L.pi_weight(L.pi_weight(L.Lambda(k)), -1) == L.Lambda(k));
    }
    for (int k = 0; k < n; ++k) CHECK(L.pi_coroot(L.rd.coroots[k]) == L.rd.coroots[(k + 1) % n]);
    // pi preserves the pairing
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        IVec x(n + 1, 0), y(n + 1, 0);
        x[a] = 1;
        y[b] = 1;
        CHECK(dot(L.pi_coroot(x), L.pi_weight(y)) == dot(x, y));
      }
  }
  CHECK_THROWS_AS(AffineALattice::make(2), InputError);
}

TEST_CASE("translations") {
  for (int n : {3, 4}) {
    HirotaContext h(n);
    auto L = h.lattice();
    CHECK(act_weight(L, translation(L, 1), L.Lambda(0)) == add(L.Lambda(0), L.eps(1)));
    require_pass(h.check_translations());
  }
}

TEST_CASE("QHME lemma and the commutativity remarks") {
  for (int n : {3, 4})
    for (int sign : {1, -1}) {
      HirotaContext h(n, sign);
      for (long k = 0; k < n; ++k) {
        auto rep = h.check_lemma(k);
        for (auto& it : rep.items) {
          CAPTURE(it.label);
          CAPTURE(it.detail);
          CHECK(it.status == (it.label.rfind("remark:", 0) == 0 ? "fail" : "pass"));
        }
        CHECK(rep.count("fail") == 2);
      }
    }
}

TEST_CASE("translated QHME") {
  for (int n : {3, 4}) {
    HirotaContext h(n);
    std::vector<IVec> ms(3, IVec(n, 0));
    ms[1][0] = 1;
    ms[2][0] = 1;
    ms[2][1] = 1;
    for (long k = 0; k < n; ++k)
      for (auto& m : ms) {
        auto rep = h.check_translated(k, m);
        require_pass(rep);
        CHECK(rep.count("pass") == 2);
        CHECK(rep.count("info-fails") == 1);
      }
  }
}

TEST_CASE("non-rotatable commutators are rejected by pi transport") {
  HirotaContext h(3);
  auto t = h.tau(0);
  CHECK(h.pi(t, 3) == h.mul(h.tau(0), h.action().tau_monomial(h.lattice().varpi(3))));
  CHECK(h.pi(h.pi(t, 2), -2) == t);
}
