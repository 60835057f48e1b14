#include "qtau/classical.hpp"
#include "qtau/hirota.hpp"
#include "qtau/verma_checks.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qtau;

namespace {

const IMat A1xA1 = {{2, 0}, {0, 2}};
const IMat A2 = {{2, -1}, {-1, 2}};
const IMat B2 = {{2, -1}, {-2, 2}};
const IMat G2 = {{2, -1}, {-3, 2}};
const IMat A3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  // Folds a report in; failing items become notes.
  void absorb(const CheckReport& rep, long* passed = nullptr, long* unsupported = nullptr) {
    for (auto& it : rep.items) {
      if (it.status == "fail") {
        pass = false;
        notes.push_back(rep.name + ": " + it.label + (it.detail.empty() ? "" : " (" + it.detail + ")"));
      }
      if (passed && it.status == "pass") ++*passed;
      if (unsupported && it.status == "unsupported") ++*unsupported;
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds, 0 for none
  std::function<Outcome()> run;
};

std::string type_name(const IMat& a) {
  if (a == A1xA1) return "A1xA1";
  if (a == A2) return "A2";
  if (a == B2) return "B2";
  if (a == G2) return "G2";
  return "A3";
}

std::vector<IVec> fundamentals_and_rho(const RootDatum& rd) {
  auto out = rd.fundamentals;
  out.push_back(rd.rho());
  return out;
}

std::vector<IVec> verma_weights(const RootDatum& rd) {
  auto out = fundamentals_and_rho(rd);
  out.insert(out.begin(), rd.zero());
  return out;
}

bool fits(const RootDatum& rd, const WeylWord& w, const IVec& l, const IVec& m, int cap) {
  return static_cast<int>(F_w_lambda(rd, w, add(l, m)).size()) <= cap;
}

Outcome a3_example() {
  auto rd = validate_gcm(A3);
  auto r = ConstCommutator::make(rd);
  WeylAction<ConstCommutator> act(r);
  // The printed X_k with beta_1..beta_6 = b1, b1+b2, b1+b2+b3, b2, b2+b3, b3.
  const std::vector<std::string> beta = {"(b1)", "(b1 + b2)", "(b1 + b2 + b3)", "(b2)", "(b2 + b3)", "(b3)"};
  auto B = [&](int k) { return beta[k - 1]; };
  const std::vector<std::string> printed = {
      "f1",
      "f1 f2 + " + B(2),
      "f1 f2 f3 + " + B(3) + " f1 + " + B(2) + " f3",
      "f1 f2 f3 + " + B(3) + " f1 + (" + B(2) + " - " + B(4) + ") f3",
      "f1 f2 f3 + (" + B(3) + " - " + B(5) + ") f1 + (" + B(2) + " - " + B(4) + " + " + B(5) + ") f3",
      "f1 f2 f3 + " + B(6) + " f1 + (" + B(3) + " - " + B(6) + ") f3",
  };
  const WeylWord word{0, 1, 2, 0, 1, 0};
  Outcome o;
  int matched = 0;
  for (int k = 2; k <= 6; ++k) {
    WeylWord w(word.begin(), word.begin() + k);
    auto t = act.tau_function(w, rd.fundamentals[0]);
    auto x = act.tilde(inverse_word(w), t.prefactor);
    auto expected = parse_elem(*r, printed[k - 1]);
    bool ok = x == expected;
    matched += ok;
    o.require(ok, "X_" + std::to_string(k) + ": computed " + r->str(x) + ", printed " + r->str(expected));
  }
  o.summary = std::to_string(matched) + "/5 transported prefactors match the printed X_2..X_6";
  if (!o.pass)
    o.notes.push_back(
        "analysis: the printed X_6 contradicts its own recursion X_6 = f1^-beta_6 X_5 f1^beta_6 applied to the "
        "printed X_5, which gives (beta_3 - beta_5) f1 + (beta_3 - beta_6) f3 = b1 f1 + (b1 + b2) f3; an "
        "integer-power conjugation on a weight grid agrees with the computed value");
  return o;
}

Outcome verma_identities() {
  Outcome o;
  long passed = 0, unsupported = 0;
  for (const IMat& a : {A1xA1, A2, B2, G2}) {
    auto rd = validate_gcm(a);
    o.absorb(verma_identity_check(*ConstCommutator::make(rd), 0, 1, 3), &passed, &unsupported);
    o.absorb(verma_identity_check(*QCommutator::make(rd), 0, 1, 3), &passed, &unsupported);
  }
  o.absorb(xd_verma_check(3), &passed, &unsupported);
  o.require(passed > 0, "no instance inside the supported region");
  o.summary = std::to_string(passed) + " instances hold, " + std::to_string(unsupported) +
              " outside the supported localization";
  return o;
}

Outcome braid_relations() {
  Outcome o;
  long passed = 0, unsupported = 0;
  auto run = [&](const auto& act) {
    o.absorb(act.verify_braid(0, 1), &passed, &unsupported);
    for (int i = 0; i < 2; ++i) o.absorb(act.verify_involution(i), &passed, &unsupported);
  };
  for (const IMat& a : {A1xA1, A2, B2, G2}) {
    auto rd = validate_gcm(a);
    run(WeylAction<ConstCommutator>(ConstCommutator::make(rd)));
    run(WeylAction<QCommutator>(QCommutator::make(rd)));
  }
  o.summary = std::to_string(passed) + " relations hold symbolically";
  if (unsupported)
    o.summary += ", " + std::to_string(unsupported) +
                 " direct f_k checks need an inverse of a sum (f_k is covered through s_k(tau_k))";
  return o;
}

template <class R>
void regularity_sweep(const RootDatum& rd, Outcome& o, long& count) {
  WeylAction<R> act(R::make(rd));
  for (auto& w : reduced_words(rd, 5))
    for (auto& mu : fundamentals_and_rho(rd)) {
      auto t = act.tau_function(w, mu);
      std::string witness;
      ++count;
      o.require(act.is_regular(t, &witness), instance_str(rd, w, rd.zero(), mu) + ": " + witness);
    }
}

Outcome regularity() {
  Outcome o;
  long count = 0;
  for (const IMat& a : {A2, A3, B2}) {
    auto rd = validate_gcm(a);
    regularity_sweep<ConstCommutator>(rd, o, count);
    regularity_sweep<QCommutator>(rd, o, count);
  }
  o.summary = std::to_string(count) + " tau-functions checked";
  return o;
}

Outcome hirota() {
  Outcome o;
  long passed = 0, remark = 0;
  for (int n : {3, 4}) {
    HirotaContext ctx(n);
    std::vector<IVec> ms;
    IVec m(n, 0);
    ms.push_back(m);
    m[0] = 1;
    ms.push_back(m);
    m[1] = 1;
    ms.push_back(m);
    for (long k = 1; k <= n; ++k) {
      auto lemma = ctx.check_lemma(k);
      for (auto& it : lemma.items) remark += it.status == "fail" && it.label.rfind("remark:", 0) == 0;
      o.absorb(lemma, &passed);
      for (auto& mm : ms) o.absorb(ctx.check_translated(k, mm), &passed);
    }
    o.absorb(ctx.check_translations(), &passed);
  }
  o.summary = std::to_string(passed) + " items hold";
  if (remark)
    o.notes.insert(
        o.notes.begin(),
        "analysis: the remark's third fact is inverted in computation; s_k(tau_k) s_k+1(tau_k+1) = q^c "
        "s_k+1(tau_k+1) s_k(tau_k) with c = +-1, and each factor commutes with [a_k + a_k+1]_q because "
        "<a_k + a_k+1, Lambda_k - alpha_k> = 0; the lemma identity, the other two facts and every translated "
        "equation hold; " + std::to_string(remark) + " printed remark items fail");
  return o;
}

struct VermaCoverage {
  long done = 0, skipped = 0;
};

template <class F>
VermaCoverage verma_sweep(const RootDatum& rd, int cap, Outcome& o) {
  SerreQuotient<F> u(rd, cap);
  VermaCoverage c;
  for (auto& w : reduced_words(rd, 3))
    for (auto& l : verma_weights(rd))
      for (auto& m : verma_weights(rd)) {
        if (!fits(rd, w, l, m, cap)) {
          ++c.skipped;
          continue;
        }
        ++c.done;
        o.absorb(verma_instance_check(u, w, l, m));
      }
  return c;
}

Outcome singular_divisibility() {
  Outcome o;
  std::ostringstream s;
  for (const IMat& a : {A2, B2, A3}) {
    auto rd = validate_gcm(a);
    auto q = verma_sweep<RatFun>(rd, 12, o);
    auto km = verma_sweep<Rational>(rd, 18, o);
    s << type_name(a) << " q " << q.done << " (" << q.skipped << " above degree 12), km " << km.done << " ("
      << km.skipped << " above degree 18); ";
  }
  o.summary = s.str();
  o.summary.resize(o.summary.size() - 2);
  return o;
}

template <class R, class F>
VermaCoverage crosscheck_sweep(const RootDatum& rd, int cap, Outcome& o) {
  WeylAction<R> act(R::make(rd));
  SerreQuotient<F> u(rd, cap);
  VermaCoverage c;
  for (auto& w : reduced_words(rd, 3))
    for (auto& l : verma_weights(rd))
      for (auto& m : verma_weights(rd)) {
        if (!fits(rd, w, l, m, cap)) {
          ++c.skipped;
          continue;
        }
        ++c.done;
        o.absorb(sigma_phi_crosscheck(act, u, w, l, m));
      }
  return c;
}

Outcome sigma_phi() {
  Outcome o;
  std::ostringstream s;
  for (const IMat& a : {A2, B2, A3}) {
    auto rd = validate_gcm(a);
    auto q = crosscheck_sweep<QCommutator, RatFun>(rd, 12, o);
    auto km = crosscheck_sweep<ConstCommutator, Rational>(rd, 18, o);
    s << type_name(a) << " q " << q.done << ", km " << km.done << "; ";
  }
  o.summary = s.str();
  o.summary.resize(o.summary.size() - 2);
  return o;
}

Outcome okamoto() {
  Outcome o;
  auto seq = okamoto_seq(8);
  o.require(seq.size() == 9, "sequence stopped early");
  bool exact = true;
  for (auto& s : seq) exact = exact && s.exact;
  o.require(exact, "nonzero division remainder");
  o.require(seq[0].q == QPoly(1) && seq[1].q == QPoly(1), "Q_0 = Q_1 = 1");
  o.require(seq[2].q == QPoly::x() * QPoly::x() + QPoly(1), "Q_2 = x^2 + 1");
  o.summary = "Q_0..Q_8 exact, Q_2 = " + to_string(seq[2].q, "x") + ", deg Q_8 = " + std::to_string(seq[8].q.degree());
  return o;
}

template <class R>
long reduced_word_sweep(const RootDatum& rd, Outcome& o) {
  WeylAction<R> act(R::make(rd));
  auto all = reduced_words(rd, 4);
  long pairs = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (all[a].size() != all[b].size() || !same_weyl_element(rd, all[a], all[b])) continue;
      for (auto& mu : fundamentals_and_rho(rd)) {
        ++pairs;
        o.absorb(act.reduced_word_independence(all[a], all[b], mu));
      }
    }
  return pairs;
}

Outcome reduced_word_independence() {
  Outcome o;
  auto rd = validate_gcm(A3);
  long km = reduced_word_sweep<ConstCommutator>(rd, o);
  long q = reduced_word_sweep<QCommutator>(rd, o);
  o.summary = std::to_string(km) + " KM and " + std::to_string(q) + " q comparisons of reduced expressions";
  return o;
}

Outcome q_limit() {
  Outcome o;
  long count = 0;
  for (const IMat& a : {A2, B2, A3}) {
    auto rd = validate_gcm(a);
    SerreQuotient<RatFun> uq(rd, 12);
    SerreQuotient<Rational> uk(rd, 12);
    for (auto& w : reduced_words(rd, 3))
      for (auto& l : verma_weights(rd))
        for (auto& m : verma_weights(rd)) {
          if (!fits(rd, w, l, m, 12)) continue;
          ++count;
          o.absorb(q_limit_check(uq, uk, w, l, m));
        }
  }
  o.summary = std::to_string(count) + " shared instances specialize";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "A3 tau-function reproduction", 1, a3_example},
      {2, "Verma identities", 30, verma_identities},
      {3, "braid relations", 60, braid_relations},
      {4, "regularity instances", 300, regularity},
      {5, "quantum q-Hirota-Miwa", 120, hirota},
      {6, "singular-vector divisibility", 600, singular_divisibility},
      {7, "sigma o phi cross-check", 0, sigma_phi},
      {8, "Okamoto polynomials", 1, okamoto},
      {9, "reduced-word independence", 0, reduced_word_independence},
      {10, "q -> 1 consistency", 0, q_limit},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("aborted: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.budget == 0 || secs < c.budget;
    if (!in_time) o.notes.push_back("exceeded the time budget");
    bool ok = o.pass && in_time;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  ["
              << std::fixed << std::setprecision(2) << secs << " s] " << o.summary << "\n";
    const std::size_t shown = 12;
    for (std::size_t k = 0; k < o.notes.size() && k < shown; ++k) std::cout << "          " << o.notes[k] << "\n";
    if (o.notes.size() > shown) std::cout << "          ... " << o.notes.size() - shown << " more\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
