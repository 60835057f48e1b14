#include "common.hpp"
#include "doctest.h"

#include <map>
#include <queue>
#include <random>

using namespace qtau;
using namespace fixtures;

TEST_CASE("symmetrizer is minimal and validated") {
  CHECK(datum(A2).sym == IVec{1, 1});
  CHECK(datum(B2).sym == IVec{2, 1});
  CHECK(datum(G2).sym == IVec{3, 1});
  CHECK(datum(C3).sym == IVec{1, 1, 2});
  CHECK(datum(A1xA1).sym == IVec{1, 1});
  CHECK(validate_gcm(B2, IVec{4, 2}).sym == IVec{4, 2});
  CHECK_THROWS_AS(validate_gcm(B2, IVec{1, 1}), InputError);
}

TEST_CASE("GCM axioms are enforced") {
  CHECK_THROWS_AS(validate_gcm({{2, -1}, {0, 2}}), InputError);
  CHECK_THROWS_AS(validate_gcm({{2, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(validate_gcm({{3, -1}, {-1, 2}}), InputError);
  // 3-cycle whose product of ratios is not 1
  CHECK_THROWS_AS(validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}), InputError);
}

TEST_CASE("simple reflections on coroots and weights") {
  for (auto& a : {A2, B2, G2, A3, C3}) {
    RootDatum rd = datum(a);
    int n = rd.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IVec expect = add(rd.coroots[j], rd.coroots[i], -rd.cartan[j][i]);
        CHECK(reflect_coroot(rd, i, rd.coroots[j]) == expect);
        IVec lam = rd.fundamentals[j];
        if (i == j) lam = add(lam, rd.roots[i], -1);
        CHECK(reflect_weight(rd, i, rd.fundamentals[j]) == lam);
      }
  }
}

TEST_CASE("Weyl action preserves the pairing and reflections are involutions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  for (auto& a : {A2, B2, G2, A3, B3}) {
    RootDatum rd = datum(a);
    int n = rd.rank();
    std::uniform_int_distribution<int> idx(0, n - 1);
    for (int trial = 0; trial < 30; ++trial) {
      IVec beta(n), lam(n);
      for (auto& x : beta) x = val(rng);
      for (auto& x : lam) x = val(rng);
      WeylWord w;
      for (int k = 0; k < 5; ++k) w.push_back(idx(rng));
      CHECK(rd.pair(weyl_act_coroot(rd, w, beta), weyl_act_weight(rd, w, lam)) == rd.pair(beta, lam));
      int i = idx(rng);
      CHECK(reflect_weight(rd, i, reflect_weight(rd, i, lam)) == lam);
      CHECK(reflect_coroot(rd, i, reflect_coroot(rd, i, beta)) == beta);
    }
  }
}

TEST_CASE("braid relations hold as lattice maps") {
  for (auto& a : {A1xA1, A2, B2, G2, A3, C3}) {
    RootDatum rd = datum(a);
    for (int i = 0; i < rd.rank(); ++i)
      for (int j = 0; j < rd.rank(); ++j) {
        if (i == j) continue;
        int m = braid_order(rd, i, j);
        REQUIRE(m > 0);
        WeylWord l, r;
        for (int k = 0; k < m; ++k) {
          l.push_back(k % 2 ? j : i);
          r.push_back(k % 2 ? i : j);
        }
        CHECK(same_weyl_element(rd, l, r));
        CHECK_FALSE(same_weyl_element(rd, WeylWord(l.begin(), l.end() - 1), WeylWord(r.begin(), r.end() - 1)));
      }
  }
}

TEST_CASE("shifted action") {
  RootDatum rd = datum(A2);
  IVec lam{2, -1};
  CHECK(shifted_act(rd, {}, lam) == lam);
  for (int i = 0; i < 2; ++i) {
    long h = rd.pair(rd.coroots[i], lam);
    CHECK(shifted_act(rd, {i}, lam) == add(lam, rd.roots[i], -(h + 1)));
  }
  CHECK(shifted_act(rd, {0}, rd.zero()) == scaled(rd.roots[0], -1));
}

namespace {

// Breadth-first search over the finite group gives exact lengths.
std::map<std::vector<IVec>, int> cayley_lengths(const RootDatum& rd) {
  auto key = [&](const WeylWord& w) {
    std::vector<IVec> k;
    for (int b = 0; b < rd.rank(); ++b) k.push_back(weyl_act_weight(rd, w, fixtures::unit(rd.rank(), b)));
    return k;
  };
  std::map<std::vector<IVec>, int> dist;
  std::queue<WeylWord> q;
  dist[key({})] = 0;
  q.push({});
  while (!q.empty()) {
    WeylWord w = q.front();
    q.pop();
    int d = dist[key(w)];
    for (int i = 0; i < rd.rank(); ++i) {
      WeylWord u = w;
      u.push_back(i);
      auto k = key(u);
      if (!dist.count(k)) {
        dist[k] = d + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("is_reduced agrees with exhaustive enumeration up to length 8") {
  for (auto& a : {A2, B2, G2, A3, B3, C3}) {
    RootDatum rd = datum(a);
    auto dist = cayley_lengths(rd);
    int n = rd.rank();
    std::vector<WeylWord> layer{{}};
    for (int len = 1; len <= 8; ++len) {
      std::vector<WeylWord> next;
      for (auto& w : layer)
        for (int i = 0; i < n; ++i) {
          WeylWord u = w;
          u.push_back(i);
          next.push_back(u);
        }
      for (auto& w : next) {
        std::vector<IVec> k;
        for (int b = 0; b < n; ++b) k.push_back(weyl_act_weight(rd, w, unit(n, b)));
        int truth = dist.at(k);
        auto info = is_reduced(rd, w);
        CHECK(info.length == truth);
        CHECK(info.reduced == (truth == len));
      }
      layer = std::move(next);
    }
  }
}

TEST_CASE("is_reduced examples") {
  CHECK_FALSE(is_reduced(datum(A2), {0, 0}).reduced);
  CHECK(is_reduced(datum(A2), {0, 1, 0}).reduced);
  auto aff = validate_gcm(A1_1, std::nullopt, {"0", "1"});
  CHECK(is_reduced(aff, {0, 1, 0, 1}).reduced);
  CHECK(is_reduced(aff, {0, 1, 0, 1, 0, 1, 0, 1, 0}).length == 9);
}

TEST_CASE("dominant decomposition") {
  RootDatum a2 = datum(A2);
  auto d0 = dominant_decompose(a2, a2.fundamentals[0]);
  REQUIRE(d0);
  CHECK(d0->word.empty());
  auto d1 = dominant_decompose(a2, add(a2.fundamentals[0], a2.roots[0], -1));
  REQUIRE(d1);
  CHECK(d1->word == WeylWord{0});
  CHECK(d1->mu == a2.fundamentals[0]);

  RootDatum a3 = datum(A3);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (long z = -3; z <= 3; ++z) {
        IVec nu{x, y, z};
        auto d = dominant_decompose(a3, nu);
        REQUIRE(d);
        CHECK(is_dominant(a3, d->mu));
        CHECK(weyl_act_weight(a3, d->word, d->mu) == nu);
      }

  auto aff = validate_gcm(A1_1, std::nullopt, {"0", "1"});
  CHECK(aff.roots[0] == IVec{2, -2});
  CHECK_FALSE(dominant_decompose(aff, {-1, -1}, 200).has_value());
}
