#include "qtau/cartan.hpp"

#include <boost/integer/common_factor.hpp>

#include <queue>

namespace qtau {

int RootDatum::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  throw InputError("unknown index label '" + label + "'");
}

IVec RootDatum::rho() const {
  IVec r = zero();
  for (auto& l : fundamentals) r = add(r, l);
  return r;
}

void RootDatum::check_lattice() const {
  int r = rank(), m = lattice_rank();
  if (static_cast<int>(weight_names.size()) != m) throw InputError("lattice bases differ in rank");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(coroots[i].size()) != m || static_cast<int>(roots[i].size()) != m ||
        static_cast<int>(fundamentals[i].size()) != m)
      throw InputError("lattice vector of wrong length");
    for (int j = 0; j < r; ++j) {
      if (pair(coroots[i], roots[j]) != cartan[i][j])
        throw InputError("pairing of simple coroots and roots differs from the Cartan matrix");
      if (pair(coroots[i], fundamentals[j]) != (i == j ? 1 : 0))
        throw InputError("fundamental weights are not dual to the simple coroots");
      if (i != j && roots[i] == roots[j]) throw InputError("model-violation: equal simple roots");
    }
  }
}

IVec minimal_symmetrizer(const IMat& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  IVec out(n, 0);
  for (int root = 0; root < n; ++root) {
    if (!d[root].is_zero()) continue;
    std::vector<int> block;
    std::queue<int> bfs;
    d[root] = 1;
    bfs.push(root);
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop();
      block.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        Rational dj = d[i] * a[i][j] / a[j][i];
        if (d[j].is_zero()) {
          d[j] = dj;
          bfs.push(j);
        } else if (d[j] != dj) {
          throw InputError("not-symmetrizable: no positive solution of d_i a_ij = d_j a_ji");
        }
      }
    }
    Integer l = 1;
    for (int i : block) l = boost::integer::lcm(l, boost::multiprecision::denominator(d[i]));
    Integer g = 0;
    for (int i : block) g = boost::integer::gcd(g, boost::multiprecision::numerator(d[i] * l));
    for (int i : block) out[i] = static_cast<long>(boost::multiprecision::numerator(d[i] * l) / g);
  }
  return out;
}

RootDatum validate_gcm(const IMat& a, const std::optional<IVec>& d_hint,
                       std::vector<std::string> labels) {
  int n = static_cast<int>(a.size());
  if (n == 0) throw InputError("empty Cartan matrix");
  for (auto& row : a)
    if (static_cast<int>(row.size()) != n) throw InputError("Cartan matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a[i][j] != 2) throw InputError("not-a-GCM: diagonal entry differs from 2");
      if (i != j && a[i][j] > 0) throw InputError("not-a-GCM: positive off-diagonal entry");
      if (i != j && (a[i][j] == 0) != (a[j][i] == 0))
        throw InputError("not-a-GCM: a_ij = 0 without a_ji = 0");
    }
  IVec d;
  if (d_hint) {
    d = *d_hint;
    if (static_cast<int>(d.size()) != n) throw InputError("symmetrizer has wrong length");
    for (int i = 0; i < n; ++i) {
      if (d[i] <= 0) throw InputError("symmetrizer entries must be positive");
      for (int j = 0; j < n; ++j)
        if (d[i] * a[i][j] != d[j] * a[j][i])
          throw InputError("given symmetrizer does not satisfy d_i a_ij = d_j a_ji");
    }
  } else {
    d = minimal_symmetrizer(a);
  }
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != n) throw InputError("label count differs from rank");

  RootDatum rd;
  rd.labels = labels;
  rd.cartan = a;
  rd.sym = d;
  for (int i = 0; i < n; ++i) {
    rd.coroot_names.push_back("b" + labels[i]);
    rd.weight_names.push_back("L" + labels[i]);
    IVec e(n, 0);
    e[i] = 1;
    rd.coroots.push_back(e);
    rd.fundamentals.push_back(e);
    IVec alpha(n, 0);
    for (int k = 0; k < n; ++k) alpha[k] = a[k][i];
    rd.roots.push_back(alpha);
  }
  rd.check_lattice();
  return rd;
}

void check_word(const RootDatum& rd, const WeylWord& w) {
  for (int i : w)
    if (i < 0 || i >= rd.rank()) throw InputError("word entry outside the index set");
}

IVec reflect_coroot(const RootDatum& rd, int i, IVec beta) {
  return add(std::move(beta), rd.coroots[i], -rd.pair(beta, rd.roots[i]));
}

IVec reflect_weight(const RootDatum& rd, int i, IVec lambda) {
  return add(std::move(lambda), rd.roots[i], -rd.pair(rd.coroots[i], lambda));
}

IVec reflect_root(const RootDatum& rd, int i, IVec v) {
  long c = 0;
  for (int j = 0; j < rd.rank(); ++j) c += rd.cartan[i][j] * v[j];
  v[i] -= c;
  return v;
}

IVec weyl_act_coroot(const RootDatum& rd, const WeylWord& w, IVec beta) {
  check_word(rd, w);
  for (int i : w) beta = reflect_coroot(rd, i, std::move(beta));
  return beta;
}

IVec weyl_act_weight(const RootDatum& rd, const WeylWord& w, IVec lambda) {
  check_word(rd, w);
  for (int i : w) lambda = reflect_weight(rd, i, std::move(lambda));
  return lambda;
}

IVec weyl_act_root(const RootDatum& rd, const WeylWord& w, IVec v) {
  check_word(rd, w);
  for (int i : w) v = reflect_root(rd, i, std::move(v));
  return v;
}

WeylWord inverse_word(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

IVec shifted_act(const RootDatum& rd, const WeylWord& w, const IVec& lambda) {
  IVec r = rd.rho();
  return add(weyl_act_weight(rd, w, add(lambda, r)), r, -1);
}

ReducedInfo is_reduced(const RootDatum& rd, const WeylWord& w) {
  check_word(rd, w);
  // Track u = s_{i_1} ... s_{i_{k-1}} through its images of simple roots;
  // l(u s) = l(u) + 1 exactly when u(alpha_s) is positive.
  int n = rd.rank();
  std::vector<IVec> images;  // images[j] = u(alpha_j)
  for (int j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    images.push_back(e);
  }
  int length = 0;
  bool reduced = true;
  for (int s : w) {
    const IVec& v = images[s];
    bool positive = true;
    for (long x : v)
      if (x < 0) positive = false;
    if (positive) {
      ++length;
    } else {
      --length;
      reduced = false;
    }
    // u s (alpha_j) = u(alpha_j - a_sj alpha_s)
    IVec us = images[s];
    for (int j = 0; j < n; ++j) images[j] = add(images[j], us, -rd.cartan[s][j]);
  }
  return {reduced, length};
}

bool is_dominant(const RootDatum& rd, const IVec& lambda) {
  for (int i = 0; i < rd.rank(); ++i)
    if (rd.pair(rd.coroots[i], lambda) < 0) return false;
  return true;
}

std::optional<DominantDecomposition> dominant_decompose(const RootDatum& rd, const IVec& nu,
                                                        int cap) {
  IVec cur = nu;
  WeylWord applied;
  for (int step = 0; step <= cap; ++step) {
    int neg = -1;
    for (int i = 0; i < rd.rank() && neg < 0; ++i)
      if (rd.pair(rd.coroots[i], cur) < 0) neg = i;
    if (neg < 0) return DominantDecomposition{inverse_word(applied), cur};
    if (step == cap) break;
    cur = reflect_weight(rd, neg, cur);
    applied.push_back(neg);
  }
  return std::nullopt;
}

bool same_weyl_element(const RootDatum& rd, const WeylWord& a, const WeylWord& b) {
  int m = rd.lattice_rank();
  for (int k = 0; k < m; ++k) {
    IVec e(m, 0);
    e[k] = 1;
    if (weyl_act_coroot(rd, a, e) != weyl_act_coroot(rd, b, e)) return false;
    if (weyl_act_weight(rd, a, e) != weyl_act_weight(rd, b, e)) return false;
  }
  return true;
}

int braid_order(const RootDatum& rd, int i, int j) {
  long p = rd.cartan[i][j] * rd.cartan[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

std::vector<WeylWord> reduced_words(const RootDatum& rd, int n) {
  std::vector<WeylWord> out{{}}, frontier{{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<WeylWord> next;
    for (auto& w : frontier)
      for (int i = 0; i < rd.rank(); ++i) {
        WeylWord v = w;
        v.push_back(i);
        if (is_reduced(rd, v).reduced) next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace qtau
