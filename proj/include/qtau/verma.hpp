#pragma once

#include "qtau/cartan.hpp"
#include "qtau/format.hpp"
#include "qtau/ratfun.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<qtau::RatFun> : GenericNumTraits<qtau::RatFun> {
  using Real = qtau::RatFun;
  using NonInteger = qtau::RatFun;
  using Literal = qtau::RatFun;
  using Nested = qtau::RatFun;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace qtau {

// Word in the generators f_i, leftmost letter first.
using FWord = std::vector<int>;

// Resource guard for the graded quotient.
struct DegreeCapExceeded : InputError {
  using InputError::InputError;
};

template <class F>
struct VermaField;

template <>
struct VermaField<Rational> {
  static constexpr bool quantum = false;
  static Rational binom(long n, long k, long) { return binomial(n, k); }
  // Value of h_i on a weight with <alpha_i^v, nu> = h.
  static Rational h_value(long h, long) { return Rational(h); }
  static bool is_unit(const Rational& c) { return c == 1 || c == -1; }
  static SignedTerm term(const Rational& c, const std::string& mono) { return coef_term(c, mono); }
};

template <>
struct VermaField<RatFun> {
  static constexpr bool quantum = true;
  static RatFun binom(long n, long k, long d) { return qbinom(n, k, d); }
  static RatFun h_value(long h, long d) { return qint(h, d); }
  static bool is_unit(const RatFun& c) {
    return c.is_laurent_monomial() && (c.num().lead() == 1 || c.num().lead() == -1);
  }
  static SignedTerm term(const RatFun& c, const std::string& mono) {
    return product_term(c.str(), mono);
  }
};

// Homogeneous linear combination of words.
template <class F>
using GradedWord = std::map<FWord, F>;

inline IVec word_degree(const FWord& w, int rank) {
  IVec d(rank, 0);
  for (int i : w) ++d[i];
  return d;
}

inline FWord sigma(FWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

template <class F>
GradedWord<F> sigma(const GradedWord<F>& p) {
  GradedWord<F> out;
  for (auto& [w, c] : p) out[sigma(w)] = c;
  return out;
}

std::string word_str(const RootDatum& rd, const FWord& w);

template <class F>
std::string graded_str(const RootDatum& rd, const GradedWord<F>& p) {
  std::vector<SignedTerm> terms;
  for (auto& [w, c] : p) terms.push_back(VermaField<F>::term(c, word_str(rd, w)));
  return join_terms(terms);
}

// Exponents N_k = <alpha^v_{j_k}, s_{j_{k-1}} ... s_{j_1} o lambda> + 1 for
// the word (j_1, ..., j_m); throws InputError unless w is reduced, lambda is
// dominant and every N_k >= 0.
IVec verma_exponents(const RootDatum& rd, const WeylWord& w, const IVec& lambda);
// F_{w,lambda} = f_{j_m}^{N_m} ... f_{j_1}^{N_1} as a single word.
FWord F_w_lambda(const RootDatum& rd, const WeylWord& w, const IVec& lambda);
// Number of words with the given letter counts.
Integer free_dimension(const IVec& degree);

// Solution of a x = b over an exact field, free variables set to zero.
template <class F>
struct LinearSolution {
  bool consistent = false;
  std::vector<F> x;
  int nullity = 0;
};

// Fraction-free (Bareiss) elimination with full pivoting: every division is
// exact, so Laurent q-coefficients stay Laurent until the final Cramer
// quotients x_j = y_j / det.
template <class F>
LinearSolution<F> solve_exact(Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic> a, std::vector<F> b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> perm(cols);
  for (Eigen::Index c = 0; c < cols; ++c) perm[c] = c;
  F prev(1);
  Eigen::Index r = 0;
  for (; r < rows && r < cols; ++r) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = r; i < rows && pr < 0; ++i)
      for (Eigen::Index c = r; c < cols; ++c)
        if (!is_zero(a(i, c))) {
          pr = i, pc = c;
          break;
        }
    if (pr < 0) break;
    if (pr != r) {
      a.row(pr).swap(a.row(r));
      std::swap(b[pr], b[r]);
    }
    if (pc != r) {
      a.col(pc).swap(a.col(r));
      std::swap(perm[pc], perm[r]);
    }
    const F p = a(r, r);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const F f = a(i, r);
      for (Eigen::Index j = r + 1; j < cols; ++j) a(i, j) = (p * a(i, j) - f * a(r, j)) / prev;
      b[i] = (p * b[i] - f * b[r]) / prev;
      a(i, r) = F(0);
    }
    prev = p;
  }
  LinearSolution<F> out;
  out.nullity = static_cast<int>(cols - r);
  out.consistent = true;
  for (Eigen::Index i = r; i < rows; ++i)
    if (!is_zero(b[i])) out.consistent = false;
  if (!out.consistent) return out;
  out.x.assign(cols, F(0));
  std::vector<F> y(r);
  for (Eigen::Index k = r; k-- > 0;) {
    F acc = prev * b[k];
    for (Eigen::Index j = k + 1; j < r; ++j) acc = acc - a(k, j) * y[j];
    y[k] = acc / a(k, k);
  }
  for (Eigen::Index k = 0; k < r; ++k) out.x[perm[k]] = y[k] / prev;
  return out;
}

// U_- (KM, F = Rational) or U_q(n_-) (F = RatFun) degree by degree:
// U_d = (+)_i f_i U_{d - alpha_i} modulo the span of S v, S a (q-)Serre
// relator and v a basis vector of U_{d - deg S}. The relation rows are kept in
// reduced row echelon form; non-pivot columns give a basis of words.
template <class F>
class SerreQuotient {
 public:
  using Field = VermaField<F>;
  using Row = std::map<int, F>;

  struct Component {
    IVec degree;
    std::vector<int> offset;                  // block start per letter, -1 if absent
    std::vector<std::pair<int, int>> columns;  // (letter, lower basis index)
    std::map<int, Row> rows;                  // pivot column -> reduced row
    std::vector<int> col_to_basis;            // basis index or -1 for pivots
    std::vector<int> basis_cols;
    std::vector<FWord> basis;
    long relation_count = 0;
  };

  struct Elem {
    IVec degree;
    std::vector<F> coords;
  };

  SerreQuotient(RootDatum rd, int cap) : rd_(std::move(rd)), cap_(cap) {
    if (cap < 0 || cap > 64) throw InputError("degree cap must lie in [0, 64]");
  }

  const RootDatum& datum() const { return rd_; }
  int cap() const { return cap_; }
  int rank() const { return rd_.rank(); }

  const Component& component(const IVec& d) {
    auto it = comps_.find(d);
    if (it != comps_.end()) return it->second;
    check_degree(d);
    return build(d);
  }
  int dim(const IVec& d) { return static_cast<int>(component(d).basis.size()); }
  const std::vector<FWord>& basis(const IVec& d) { return component(d).basis; }

  Elem zero(const IVec& d) { return {d, std::vector<F>(dim(d), F(0))}; }
  Elem unit(const IVec& d, int k) {
    Elem e = zero(d);
    e.coords[k] = F(1);
    return e;
  }
  Elem one() { return unit(IVec(rank(), 0), 0); }
  static bool is_zero(const Elem& e) {
    for (auto& c : e.coords)
      if (!qtau::is_zero(c)) return false;
    return true;
  }

  Elem left_mul(int i, const Elem& v) {
    IVec d = v.degree;
    ++d[i];
    const Component& c = component(d);
    Row sparse;
    for (std::size_t k = 0; k < v.coords.size(); ++k)
      if (!qtau::is_zero(v.coords[k])) sparse[c.offset[i] + static_cast<int>(k)] = v.coords[k];
    return {d, project(c, sparse)};
  }

  // w v for a word w
  Elem word_times(const FWord& w, Elem v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = left_mul(*it, v);
    return v;
  }
  Elem word(const FWord& w) { return word_times(w, one()); }

  Elem reduce(const GradedWord<F>& p) {
    if (p.empty()) throw InputError("cannot infer the degree of zero");
    IVec d = word_degree(p.begin()->first, rank());
    Elem out = zero(d);
    for (auto& [w, c] : p) {
      if (word_degree(w, rank()) != d) throw InputError("element is not homogeneous");
      Elem e = word(w);
      for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += c * e.coords[k];
    }
    return out;
  }

  GradedWord<F> lift(const Elem& v) {
    const auto& b = basis(v.degree);
    GradedWord<F> out;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!qtau::is_zero(v.coords[k])) out[b[k]] = v.coords[k];
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) {
    IVec d = add(a.degree, b.degree);
    Elem out = zero(d);
    const auto& words = basis(a.degree);
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (qtau::is_zero(a.coords[k])) continue;
      Elem e = word_times(words[k], b);
      for (std::size_t m = 0; m < out.coords.size(); ++m) out.coords[m] += a.coords[k] * e.coords[m];
    }
    return out;
  }

  // u s for every basis word u of degree d, sharing suffix images.
  std::vector<Elem> right_images(const IVec& d, const Elem& s) {
    std::map<IVec, std::vector<Elem>> memo;
    return right_images_rec(d, s, memo);
  }

  // e_i acting on v v_lambda in the Verma module M(lambda).
  Elem e_action(int i, const IVec& lambda, const Elem& v) {
    IVec d = v.degree;
    if (d[i] == 0) return zero(IVec(rank(), 0));
    --d[i];
    std::map<std::pair<IVec, int>, Elem> memo;
    Elem out = zero(d);
    for (std::size_t k = 0; k < v.coords.size(); ++k) {
      if (qtau::is_zero(v.coords[k])) continue;
      Elem e = e_basis(i, lambda, v.degree, static_cast<int>(k), memo);
      for (std::size_t m = 0; m < out.coords.size(); ++m) out.coords[m] += v.coords[k] * e.coords[m];
    }
    return out;
  }

  std::string str(const Elem& v) { return graded_str(rd_, lift(v)); }

 private:
  void check_degree(const IVec& d) const {
    if (static_cast<int>(d.size()) != rank()) throw InputError("degree has the wrong length");
    long total = 0;
    for (long x : d) {
      if (x < 0) throw InputError("negative degree");
      total += x;
    }
    if (total > cap_)
      throw DegreeCapExceeded("degree " + std::to_string(total) + " exceeds the cap " +
                              std::to_string(cap_));
  }

  static bool nonnegative(const IVec& d) {
    for (long x : d)
      if (x < 0) return false;
    return true;
  }

  std::vector<F> project(const Component& c, const Row& v) const {
    std::vector<F> out(c.basis.size(), F(0));
    for (auto& [col, x] : v) {
      int b = c.col_to_basis[col];
      if (b >= 0) {
        out[b] += x;
        continue;
      }
      for (auto& [rc, rx] : c.rows.at(col))
        if (rc != col) out[c.col_to_basis[rc]] -= x * rx;
    }
    return out;
  }

  void insert_row(Component& c, Row row) {
    std::vector<std::pair<int, F>> hits;
    for (auto& [col, x] : row)
      if (c.rows.count(col)) hits.emplace_back(col, x);
    for (auto& [p, x] : hits)
      for (auto& [rc, rx] : c.rows.at(p)) {
        F v = row[rc] - x * rx;
        if (qtau::is_zero(v))
          row.erase(rc);
        else
          row[rc] = v;
      }
    if (row.empty()) return;
    // Prefer the last column with a unit coefficient so that normalizing
    // keeps q-coefficients Laurent.
    auto chosen = row.rbegin();
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      if (Field::is_unit(it->second)) {
        chosen = it;
        break;
      }
    int pivot = chosen->first;
    F inv = F(1) / chosen->second;
    for (auto& [col, x] : row) x = x * inv;
    for (auto& [p, other] : c.rows) {
      auto it = other.find(pivot);
      if (it == other.end()) continue;
      F f = it->second;
      for (auto& [col, x] : row) {
        F v = other[col] - f * x;
        if (qtau::is_zero(v))
          other.erase(col);
        else
          other[col] = v;
      }
    }
    c.rows.emplace(pivot, std::move(row));
  }

  const Component& build(const IVec& d) {
    Component c;
    c.degree = d;
    if (all_zero(d)) {
      c.basis.push_back({});
      return comps_.emplace(d, std::move(c)).first->second;
    }
    int cols = 0;
    c.offset.assign(rank(), -1);
    for (int i = 0; i < rank(); ++i) {
      if (d[i] == 0) continue;
      IVec lower = d;
      --lower[i];
      int n = dim(lower);
      c.offset[i] = cols;
      for (int k = 0; k < n; ++k) c.columns.emplace_back(i, k);
      cols += n;
    }
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        if (i == j) continue;
        long n = 1 - rd_.cartan[i][j];
        IVec lower = d;
        lower[i] -= n;
        lower[j] -= 1;
        if (!nonnegative(lower)) continue;
        int m = dim(lower);
        for (int b = 0; b < m; ++b) {
          Row row;
          for (long k = 0; k <= n; ++k) {
            F coef = Field::binom(n, k, rd_.sym[i]);
            if (k % 2) coef = F(0) - coef;
            FWord w(n - k, i);
            w.push_back(j);
            w.insert(w.end(), k, i);
            Elem v = word_times(FWord(w.begin() + 1, w.end()), unit(lower, b));
            for (std::size_t t = 0; t < v.coords.size(); ++t) {
              if (qtau::is_zero(v.coords[t])) continue;
              int col = c.offset[w[0]] + static_cast<int>(t);
              F x = row[col] + coef * v.coords[t];
              if (qtau::is_zero(x))
                row.erase(col);
              else
                row[col] = x;
            }
          }
          ++c.relation_count;
          insert_row(c, std::move(row));
        }
      }
    c.col_to_basis.assign(cols, -1);
    for (int col = 0; col < cols; ++col) {
      if (c.rows.count(col)) continue;
      c.col_to_basis[col] = static_cast<int>(c.basis_cols.size());
      c.basis_cols.push_back(col);
      auto [letter, k] = c.columns[col];
      IVec lower = d;
      --lower[letter];
      FWord w{letter};
      const FWord& tail = component(lower).basis[k];
      w.insert(w.end(), tail.begin(), tail.end());
      c.basis.push_back(std::move(w));
    }
    return comps_.emplace(d, std::move(c)).first->second;
  }

  std::vector<Elem> right_images_rec(const IVec& d, const Elem& s, std::map<IVec, std::vector<Elem>>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::vector<Elem> out;
    if (all_zero(d)) {
      out.push_back(s);
    } else {
      const Component& c = component(d);
      for (int col : c.basis_cols) {
        auto [letter, k] = c.columns[col];
        IVec lower = d;
        --lower[letter];
        out.push_back(left_mul(letter, right_images_rec(lower, s, memo)[k]));
      }
    }
    memo[d] = out;
    return out;
  }

  // e_i (u v_lambda) for the basis word u = f_j u' of degree d.
  Elem e_basis(int i, const IVec& lambda, const IVec& d, int k, std::map<std::pair<IVec, int>, Elem>& memo) {
    auto key = std::make_pair(d, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    IVec target = d;
    --target[i];
    Elem out = zero(target);
    const Component& c = component(d);
    auto [j, lower_k] = c.columns[c.basis_cols[k]];
    IVec lower = d;
    --lower[j];
    if (j == i) {
      long h = rd_.pair(rd_.coroots[i], lambda);
      for (int t = 0; t < rank(); ++t) h -= lower[t] * rd_.cartan[i][t];
      out.coords = unit(lower, lower_k).coords;
      for (auto& x : out.coords) x = x * Field::h_value(h, rd_.sym[i]);
    }
    if (lower[i] > 0) {
      Elem inner = e_basis(i, lambda, lower, lower_k, memo);
      Elem moved = left_mul(j, inner);
      for (std::size_t m = 0; m < out.coords.size(); ++m) out.coords[m] += moved.coords[m];
    }
    memo[key] = out;
    return out;
  }

  RootDatum rd_;
  int cap_;
  std::map<IVec, Component> comps_;
};

// P with big = P small in the quotient.
template <class F>
struct Division {
  bool found = false;
  typename SerreQuotient<F>::Elem quotient;
  int nullity = 0;
};

template <class F>
Division<F> divide_right(SerreQuotient<F>& u, const typename SerreQuotient<F>::Elem& big,
                         const typename SerreQuotient<F>::Elem& small) {
  IVec d = add(big.degree, small.degree, -1);
  for (long x : d)
    if (x < 0) throw InputError("degree of the divisor exceeds the degree of the dividend");
  auto images = u.right_images(d, small);
  Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic> a(big.coords.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (std::size_t r = 0; r < big.coords.size(); ++r) a(r, c) = images[c].coords[r];
  auto sol = solve_exact<F>(a, big.coords);
  Division<F> out;
  out.found = sol.consistent;
  out.nullity = sol.nullity;
  if (sol.consistent) out.quotient = {d, sol.x};
  return out;
}

// Singularity: e_i kills v v_lambda for every i.
template <class F>
bool is_singular(SerreQuotient<F>& u, const IVec& lambda, const typename SerreQuotient<F>::Elem& v,
                 int* failing = nullptr) {
  for (int i = 0; i < u.rank(); ++i)
    if (!SerreQuotient<F>::is_zero(u.e_action(i, lambda, v))) {
      if (failing) *failing = i;
      return false;
    }
  return true;
}

}  // namespace qtau
