#pragma once

#include "qtau/ncalg.hpp"
#include "qtau/parse.hpp"
#include "qtau/weyl_realization.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qtau {

// prefactor * tau^nu with the prefactor to the left of the tau-monomial.
template <class Elem>
struct TauExpr {
  Elem prefactor;
  IVec nu;
  friend bool operator==(const TauExpr& a, const TauExpr& b) {
    return a.nu == b.nu && a.prefactor == b.prefactor;
  }
};

struct CheckItem {
  std::string label;
  std::string status;  // pass, fail, unsupported, info-holds or info-fails
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;
  void add(std::string label, bool ok, std::string detail = {}) {
    items.push_back({std::move(label), ok ? "pass" : "fail", std::move(detail)});
  }
  void unsupported(std::string label, std::string detail) {
    items.push_back({std::move(label), "unsupported", std::move(detail)});
  }
  // Reported but not part of the verdict.
  void info(std::string label, bool holds, std::string detail) {
    items.push_back({std::move(label), holds ? "info-holds" : "info-fails", std::move(detail)});
  }
  int count(const std::string& status) const {
    int n = 0;
    for (auto& it : items) n += it.status == status;
    return n;
  }
  bool pass() const { return count("fail") == 0; }
};

// Quantum birational Weyl group action over a realization R (ConstCommutator,
// QCommutator or WeylRealization).
template <class R>
class WeylAction {
 public:
  using Elem = typename R::Elem;
  using Scalar = typename Elem::Scalar;
  using Ops = ScalarOps<Scalar>;
  using Tau = TauExpr<Elem>;

  explicit WeylAction(std::shared_ptr<const R> r) : r_(std::move(r)) {
    for (auto& s : serre_check(*r_))
      if (!s.pass)
        throw InputError("realization violates the Serre relation for (" + datum().labels[s.i] + ", " +
                         datum().labels[s.j] + ")");
  }

  const R& realization() const { return *r_; }
  const RootDatum& datum() const { return r_->datum(); }
  int rank() const { return r_->rank(); }

  Tau lift(const Elem& p) const { return {p, datum().zero()}; }
  Tau tau_monomial(const IVec& nu) const { return {r_->one(), nu}; }
  Tau tau_var(int i) const { return tau_monomial(datum().fundamentals[i]); }

  // tau^nu p tau^{-nu}
  Elem shift(const Elem& p, const IVec& nu) const {
    if (all_zero(nu)) return p;
    return r_->map_scalars(p, [&nu](const Scalar& s) { return Ops::shift(s, nu); });
  }

  Tau multiply(const Tau& a, const Tau& b) const {
    return {r_->multiply(a.prefactor, shift(b.prefactor, a.nu)), add(a.nu, b.nu)};
  }

  // Parameters transformed by the lattice action of w (generators fixed).
  Elem tilde(const WeylWord& w, const Elem& p) const {
    if (w.empty()) return p;
    std::vector<IVec> images;
    for (int k = 0; k < datum().lattice_rank(); ++k) {
      IVec e = datum().zero();
      e[k] = 1;
      images.push_back(weyl_act_coroot(datum(), w, e));
    }
    return r_->map_scalars(p, [&images](const Scalar& s) { return Ops::map_coroots(s, images); });
  }
  Tau tilde(const WeylWord& w, const Tau& t) const {
    return {tilde(w, t.prefactor), weyl_act_weight(datum(), w, t.nu)};
  }

  Elem apply_simple(int i, const Elem& p) const {
    AffineCoroot exp{datum().coroots[i], 0};
    return r_->conjugate(tilde(WeylWord{i}, p), i, exp);
  }

  // s_i(p tau^nu) = s_i(p) f_i^{<alpha_i^v, nu>} tau^{s_i(nu)}
  Tau apply_simple(int i, const Tau& t) const {
    long h = datum().pair(datum().coroots[i], t.nu);
    Elem p = apply_simple(i, t.prefactor);
    if (h != 0) p = r_->multiply(p, r_->gen_pow(i, h));
    return {p, reflect_weight(datum(), i, t.nu)};
  }

  // w(t) for w = s_{i_n} ... s_{i_1}.
  Tau apply_word(const WeylWord& w, Tau t) const {
    check_word(datum(), w);
    for (int i : w) t = apply_simple(i, t);
    return t;
  }

  Tau tau_function(const WeylWord& w, const IVec& mu) const {
    check_tau_args(w, mu);
    return apply_word(w, tau_monomial(mu));
  }

  // E_n with tau_{(w(mu))} = w~(E_n) tau^{w(mu)}, by the recursion
  // E_k = f^{-beta_k} E_{k-1} f^{beta_k} f^{<beta_k, mu>}.
  Elem phi_psi_prefactor(const WeylWord& w, const IVec& mu) const {
    check_tau_args(w, mu);
    Elem e = r_->one();
    WeylWord prefix;
    for (int i : w) {
      IVec beta = weyl_act_coroot(datum(), inverse_word(prefix), datum().coroots[i]);
      e = r_->conjugate(e, i, {scaled(beta, -1), 0});
      long h = datum().pair(beta, mu);
      if (h != 0) e = r_->multiply(e, r_->gen_pow(i, h));
      prefix.push_back(i);
    }
    return e;
  }

  Tau phi_psi_tau(const WeylWord& w, const IVec& mu) const {
    return {tilde(w, phi_psi_prefactor(w, mu)), weyl_act_weight(datum(), w, mu)};
  }

  bool is_regular(const Tau& t, std::string* witness = nullptr) const {
    return r_->is_regular(t.prefactor, witness);
  }

  std::string str(const Tau& t) const {
    std::string p = r_->str(t.prefactor);
    if (has_top_level_sum(p)) p = "(" + p + ")";
    std::string w;
    for (std::size_t k = 0; k < t.nu.size(); ++k) w += (k ? "," : "") + std::to_string(t.nu[k]);
    return p + " * tau[" + w + "]";
  }

  Tau parse(const std::string& text) const {
    auto pos = text.rfind("tau[");
    if (pos == std::string::npos) return lift(parse_elem(*r_, text));
    auto close = text.find(']', pos);
    if (close == std::string::npos || text.find_first_not_of(" \t\n", close + 1) != std::string::npos)
      throw InputError("malformed tau monomial");
    IVec nu = parse_weight(text.substr(pos + 4, close - pos - 4));
    std::string head = text.substr(0, pos);
    auto star = head.find_last_not_of(" \t");
    if (star == std::string::npos) return tau_monomial(nu);
    if (head[star] != '*') throw InputError("expected '*' before tau[...]");
    return {parse_elem(*r_, head.substr(0, star)), nu};
  }

  IVec parse_weight(const std::string& s) const {
    IVec nu;
    std::size_t k = 0;
    while (k <= s.size()) {
      auto comma = s.find(',', k);
      std::string part = s.substr(k, comma == std::string::npos ? std::string::npos : comma - k);
      try {
        std::size_t used = 0;
        nu.push_back(std::stol(part, &used));
        if (part.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("malformed weight coordinate '" + part + "'");
      }
      if (comma == std::string::npos) break;
      k = comma + 1;
    }
    if (static_cast<int>(nu.size()) != datum().lattice_rank())
      throw InputError("weight has " + std::to_string(nu.size()) + " coordinates, expected " +
                       std::to_string(datum().lattice_rank()));
    return nu;
  }

  // Braid relation of (i, j) on parameters, tau_k, carriers s_k(tau_k) and,
  // where the localization allows, f_k directly.
  CheckReport verify_braid(int i, int j) const {
    int m = braid_order(datum(), i, j);
    if (m == 0)
      throw InputError("pair (" + datum().labels[i] + ", " + datum().labels[j] +
                       ") has no braid relation in the supported list");
    WeylWord lhs, rhs;
    for (int k = 0; k < m; ++k) {
      lhs.push_back(k % 2 == 0 ? i : j);
      rhs.push_back(k % 2 == 0 ? j : i);
    }
    CheckReport rep{"braid " + datum().labels[i] + "," + datum().labels[j], {}};
    auto run = [&](const std::string& label, const std::function<Tau()>& make) {
      try {
        Tau t = make();
        Tau a = apply_word(lhs, t), b = apply_word(rhs, t);
        rep.add(label, a == b, a == b ? str(a) : str(a) + " != " + str(b));
      } catch (const UnsupportedLocalization& e) {
        rep.unsupported(label, e.what());
      }
    };
    for (int k = 0; k < datum().lattice_rank(); ++k)
      run(datum().coroot_names[k], [&] { return lift(r_->scalar(Ops::symbol_of(k, datum().lattice_rank()))); });
    for (int k = 0; k < rank(); ++k) run("tau_" + datum().labels[k], [&] { return tau_var(k); });
    for (int k = 0; k < rank(); ++k)
      run("s_" + datum().labels[k] + "(tau_" + datum().labels[k] + ")",
          [&] { return apply_simple(k, tau_var(k)); });
    for (int k = 0; k < rank(); ++k) run("f" + datum().labels[k], [&] { return lift(r_->gen(k)); });
    return rep;
  }

  // s_i^2 = 1 on the same test set.
  CheckReport verify_involution(int i) const {
    CheckReport rep{"involution " + datum().labels[i], {}};
    auto run = [&](const std::string& label, const Tau& t) {
      try {
        Tau a = apply_simple(i, apply_simple(i, t));
        rep.add(label, a == t, a == t ? "" : str(a));
      } catch (const UnsupportedLocalization& e) {
        rep.unsupported(label, e.what());
      }
    };
    for (int k = 0; k < datum().lattice_rank(); ++k)
      run(datum().coroot_names[k], lift(r_->scalar(Ops::symbol_of(k, datum().lattice_rank()))));
    for (int k = 0; k < rank(); ++k) {
      run("tau_" + datum().labels[k], tau_var(k));
      run("f" + datum().labels[k], lift(r_->gen(k)));
    }
    return rep;
  }

  CheckReport reduced_word_independence(const WeylWord& a, const WeylWord& b, const IVec& mu) const {
    if (!same_weyl_element(datum(), a, b)) throw InputError("the two words are different elements of W");
    Tau ta = tau_function(a, mu), tb = tau_function(b, mu);
    CheckReport rep{"reduced-word independence", {}};
    rep.add("tau", ta == tb, ta == tb ? str(ta) : str(ta) + " != " + str(tb));
    return rep;
  }

 private:
  void check_tau_args(const WeylWord& w, const IVec& mu) const {
    check_word(datum(), w);
    if (static_cast<int>(mu.size()) != datum().lattice_rank()) throw InputError("weight has wrong dimension");
    if (!is_reduced(datum(), w).reduced) throw InputError("word is not reduced");
    if (!is_dominant(datum(), mu)) throw InputError("weight is not dominant");
  }

  std::shared_ptr<const R> r_;
};

// Verma identities with f_i^beta specialized to integer powers, beta, gamma
// in [-range, range]; a_ij = -1 after ordering the pair.
template <class R>
CheckReport verma_identity_check(const R& r, int i, int j, long range) {
  const RootDatum& rd = r.datum();
  if (rd.cartan[i][j] < rd.cartan[j][i]) std::swap(i, j);
  int m = braid_order(rd, i, j);
  struct Factor {
    int gen;
    long cb, cg;
  };
  std::vector<Factor> lhs, rhs;
  switch (m) {
    case 2:
      lhs = {{i, 1, 0}, {j, 0, 1}};
      rhs = {{j, 0, 1}, {i, 1, 0}};
      break;
    case 3:
      lhs = {{i, 1, 0}, {j, 1, 1}, {i, 0, 1}};
      rhs = {{j, 0, 1}, {i, 1, 1}, {j, 1, 0}};
      break;
    case 4:
      lhs = {{i, 1, 0}, {j, 2, 1}, {i, 1, 1}, {j, 0, 1}};
      rhs = {{j, 0, 1}, {i, 1, 1}, {j, 2, 1}, {i, 1, 0}};
      break;
    case 6:
      lhs = {{i, 1, 0}, {j, 3, 1}, {i, 2, 1}, {j, 3, 2}, {i, 1, 1}, {j, 0, 1}};
      rhs = {{j, 0, 1}, {i, 1, 1}, {j, 3, 2}, {i, 2, 1}, {j, 3, 1}, {i, 1, 0}};
      break;
    default:
      throw InputError("pair (" + rd.labels[i] + ", " + rd.labels[j] + ") has no Verma identity");
  }
  auto product = [&r](const std::vector<Factor>& fs, long b, long g) {
    auto out = r.one();
    for (auto& f : fs) out = r.multiply(out, r.gen_pow(f.gen, f.cb * b + f.cg * g));
    return out;
  };
  CheckReport rep{"verma " + rd.labels[i] + "," + rd.labels[j], {}};
  for (long b = -range; b <= range; ++b)
    for (long g = -range; g <= range; ++g) {
      std::string label = "(" + std::to_string(b) + "," + std::to_string(g) + ")";
      try {
        auto x = product(lhs, b, g), y = product(rhs, b, g);
        rep.add(label, x == y, x == y ? "" : r.str(x) + " != " + r.str(y));
      } catch (const UnsupportedLocalization& e) {
        rep.unsupported(label, e.what());
      }
    }
  return rep;
}

// x^a d^(a+b) x^b = d^b x^(a+b) d^a and, for a, b >= 0, both equal
// sum_k k! C(a+b,k) C(b,k) x^(a+b-k) d^(a+b-k).
CheckReport xd_verma_check(long range);
WeylElem xd_closed_sum(const WeylRealization& r, long a, long b);

}  // namespace qtau
