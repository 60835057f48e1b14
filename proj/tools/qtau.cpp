#include "CLI11.hpp"
#include "json.hpp"
#include "qtau/classical.hpp"
#include "qtau/hirota.hpp"
#include "qtau/verma_checks.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

using namespace qtau;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { Pass = 0, Fail = 1, Unsupported = 2, BadInput = 3 };

struct Options {
  std::string gcm, realization = "cc", type, out = "text", commutators;
  std::vector<std::string> words, weights;
  std::string word, weight, lambda, mu, pair, m, vcase = "km";
  long range = 3, n = 3, k = 0, sign = 1, length = 3, mmax = 8;
  int maxdeg = 12;
  bool xd = false, translations = false, qlimit = false;
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stol(v);
  } catch (const std::exception&) {
    throw InputError(std::string("environment variable ") + name + " is not an integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k <= s.size()) {
    auto p = s.find(sep, k);
    out.push_back(s.substr(k, p == std::string::npos ? std::string::npos : p - k));
    if (p == std::string::npos) break;
    k = p + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

long to_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("expected an integer, got '" + s + "'");
}

RootDatum load_gcm(const std::string& path) {
  if (path.empty()) throw InputError("--gcm is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open GCM file '" + path + "'");
  Json j;
  try {
    in >> j;
    IMat a = j.at("cartan").get<IMat>();
    std::optional<IVec> d;
    if (j.contains("symmetrizer")) d = j["symmetrizer"].get<IVec>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return validate_gcm(a, d, labels);
  } catch (const Json::exception& e) {
    throw InputError("malformed GCM file: " + std::string(e.what()));
  }
}

int label_index(const RootDatum& rd, const std::string& label) {
  int i = rd.index_of(trim(label));
  if (i < 0) throw InputError("unknown label '" + label + "'");
  return i;
}

WeylWord parse_word(const RootDatum& rd, const std::string& s) {
  WeylWord w;
  if (trim(s).empty() || trim(s) == "e") return w;
  for (auto& part : split(s, ',')) w.push_back(label_index(rd, part));
  return w;
}

// "1,0,2", "L1", "rho", "0", "L1+2L2+rho" or a JSON map {"1": 1, ...}.
IVec parse_weight(const RootDatum& rd, const std::string& text) {
  std::string s = trim(text);
  IVec out = rd.zero();
  if (s.empty()) throw InputError("empty weight");
  if (s[0] == '{') {
    try {
      for (auto& [label, v] : Json::parse(s).items()) out = add(out, rd.fundamentals[label_index(rd, label)], v.get<long>());
    } catch (const Json::exception& e) {
      throw InputError("malformed weight map: " + std::string(e.what()));
    }
    return out;
  }
  if (s.find(',') != std::string::npos || (rd.lattice_rank() == 1 && s.find_first_not_of("-0123456789") == std::string::npos)) {
    auto parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rd.lattice_rank())
      throw InputError("weight '" + s + "' has the wrong number of coordinates");
    for (std::size_t k = 0; k < parts.size(); ++k) out[k] = to_long(trim(parts[k]));
    return out;
  }
  for (auto& raw : split(s, '+')) {
    std::string t = trim(raw);
    std::size_t p = 0;
    while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
    long c = p ? to_long(t.substr(0, p)) : 1;
    std::string name = trim(t.substr(p));
    if (name == "0" || (name.empty() && p && c == 0)) continue;
    if (name == "rho") {
      out = add(out, rd.rho(), c);
    } else if (name.size() > 1 && name[0] == 'L') {
      out = add(out, rd.fundamentals[label_index(rd, name.substr(1))], c);
    } else {
      throw InputError("cannot read weight term '" + t + "'");
    }
  }
  return out;
}

std::string vec_str(const IVec& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string word_labels(const RootDatum& rd, const WeylWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + rd.labels[w[k]];
  return s.empty() ? "e" : s;
}

std::optional<IMat> parse_commutators(const Options& o) {
  if (o.commutators.empty()) return std::nullopt;
  try {
    return Json::parse(o.commutators).get<IMat>();
  } catch (const Json::exception& e) {
    throw InputError("malformed --commutators: " + std::string(e.what()));
  }
}

class Report {
 public:
  Report(std::string command, Json args) {
    j_["command"] = std::move(command);
    j_["args"] = std::move(args);
    j_["status"] = "pass";
    j_["checks"] = Json::array();
    j_["artifacts"] = Json::object();
  }

  void add(const CheckReport& rep) {
    Json items = Json::array();
    for (auto& it : rep.items) {
      Json x;
      x["label"] = it.label;
      x["status"] = it.status;
      if (!it.detail.empty()) x["detail"] = it.detail;
      items.push_back(x);
      fails_ += it.status == "fail";
      unsupported_ += it.status == "unsupported";
    }
    Json c;
    c["name"] = rep.name;
    c["items"] = items;
    j_["checks"].push_back(c);
  }
  Json& artifacts() { return j_["artifacts"]; }
  void skip(const std::string& what, const std::string& why) {
    CheckReport rep{what, {}};
    rep.unsupported(what, why);
    add(rep);
  }

  int finish(const std::string& out, double seconds) {
    int code = fails_ ? Fail : unsupported_ ? Unsupported : Pass;
    j_["status"] = code == Fail ? "fail" : code == Unsupported ? "unsupported" : "pass";
    j_["timing_ms"] = static_cast<long>(seconds * 1000);
    if (out == "json") {
      std::cout << j_.dump(2) << "\n";
      return code;
    }
    for (auto& [k, v] : j_["artifacts"].items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (auto& c : j_["checks"]) {
      if (!c["name"].get<std::string>().empty()) std::cout << "[" << c["name"].get<std::string>() << "]\n";
      for (auto& it : c["items"]) {
        std::cout << "  " << it["status"].get<std::string>() << "  " << it["label"].get<std::string>();
        if (it.contains("detail")) std::cout << "  (" << it["detail"].get<std::string>() << ")";
        std::cout << "\n";
      }
    }
    std::cout << "status: " << j_["status"].get<std::string>() << "\n";
    return code;
  }

 private:
  Json j_;
  int fails_ = 0, unsupported_ = 0;
};

// Calls fn with a WeylAction over the realization chosen by the options.
template <class Fn>
void with_action(const Options& o, Fn&& fn) {
  if (o.realization == "weyl") {
    if (o.type.empty()) throw InputError("--type is required for the Weyl-algebra realization");
    WeylAction<WeylRealization> act(WeylRealization::make(o.type));
    fn(act);
    return;
  }
  RootDatum rd = load_gcm(o.gcm);
  if (o.realization == "cc") {
    WeylAction<ConstCommutator> act(ConstCommutator::make(rd, parse_commutators(o)));
    fn(act);
  } else if (o.realization == "qc") {
    WeylAction<QCommutator> act(QCommutator::make(rd, parse_commutators(o)));
    fn(act);
  } else {
    throw InputError("unknown realization '" + o.realization + "' (cc, qc or weyl)");
  }
}

std::vector<IVec> weights_or_default(const RootDatum& rd, const std::vector<std::string>& given) {
  std::vector<IVec> out;
  for (auto& s : given) out.push_back(parse_weight(rd, s));
  if (out.empty()) {
    out = rd.fundamentals;
    out.push_back(rd.rho());
  }
  return out;
}

Json gcm_json(const RootDatum& rd) {
  Json j;
  j["labels"] = rd.labels;
  j["cartan"] = rd.cartan;
  j["symmetrizer"] = rd.sym;
  j["roots"] = rd.roots;
  j["rho"] = rd.rho();
  Json braid = Json::object();
  for (int i = 0; i < rd.rank(); ++i)
    for (int k = i + 1; k < rd.rank(); ++k) braid[rd.labels[i] + "," + rd.labels[k]] = braid_order(rd, i, k);
  j["braid_orders"] = braid;
  return j;
}

void cmd_gcm_validate(const Options& o, Report& rep) {
  RootDatum rd = load_gcm(o.gcm);
  rep.artifacts()["gcm"] = gcm_json(rd);
  CheckReport c{"lattice", {}};
  rd.check_lattice();
  c.add("d_i a_ij = d_j a_ji", true);
  c.add("<alpha^v_i, alpha_j> = a_ij and <alpha^v_i, Lambda_j> = delta_ij", true);
  rep.add(c);
}

void cmd_tau_compute(const Options& o, Report& rep) {
  with_action(o, [&](auto& act) {
    const RootDatum& rd = act.datum();
    IVec mu = parse_weight(rd, o.weight);
    WeylWord w;
    if (o.word.empty() && !is_dominant(rd, mu)) {
      auto dec = dominant_decompose(rd, mu, static_cast<int>(env_long("QTAU_DOMINANT_CAP", 10000)));
      if (!dec) throw UnsupportedLocalization("dominant decomposition did not finish within the cap");
      w = dec->word;
      mu = dec->mu;
    } else {
      w = parse_word(rd, o.word);
    }
    auto t = act.tau_function(w, mu);
    rep.artifacts()["word"] = word_labels(rd, w);
    rep.artifacts()["mu"] = vec_str(mu);
    rep.artifacts()["tau"] = act.str(t);
    rep.artifacts()["transported_prefactor"] = act.realization().str(act.tilde(inverse_word(w), t.prefactor));
    std::string witness;
    bool regular = act.is_regular(t, &witness);
    CheckReport c{"tau", {}};
    c.info("regular", regular, witness);
    rep.add(c);
  });
}

void cmd_tau_check_regular(const Options& o, Report& rep) {
  with_action(o, [&](auto& act) {
    const RootDatum& rd = act.datum();
    std::vector<WeylWord> words;
    if (!o.word.empty())
      words.push_back(parse_word(rd, o.word));
    else
      words = reduced_words(rd, static_cast<int>(o.length));
    std::vector<IVec> weights = o.weight.empty() ? weights_or_default(rd, o.weights)
                                                 : std::vector<IVec>{parse_weight(rd, o.weight)};
    CheckReport c{"regularity", {}};
    for (auto& w : words)
      for (auto& mu : weights) {
        std::string label = "w=" + word_labels(rd, w) + " mu=" + vec_str(mu);
        try {
          auto t = act.tau_function(w, mu);
          std::string witness;
          bool ok = act.is_regular(t, &witness);
          c.add(label, ok, ok ? "" : witness);
        } catch (const UnsupportedLocalization& e) {
          c.unsupported(label, e.what());
        }
      }
    rep.artifacts()["instances"] = static_cast<long>(c.items.size());
    rep.add(c);
  });
}

void cmd_verify_braid(const Options& o, Report& rep) {
  with_action(o, [&](auto& act) {
    const RootDatum& rd = act.datum();
    std::vector<std::pair<int, int>> pairs;
    if (!o.pair.empty()) {
      auto p = split(o.pair, ',');
      if (p.size() != 2) throw InputError("--pair takes two labels");
      pairs.push_back({label_index(rd, p[0]), label_index(rd, p[1])});
    } else {
      for (int i = 0; i < rd.rank(); ++i)
        for (int j = i + 1; j < rd.rank(); ++j)
          if (braid_order(rd, i, j)) pairs.push_back({i, j});
    }
    std::set<int> seen;
    for (auto [i, j] : pairs) {
      rep.add(act.verify_braid(i, j));
      for (int k : {i, j})
        if (seen.insert(k).second) rep.add(act.verify_involution(k));
    }
  });
}

void cmd_verify_verma_identity(const Options& o, Report& rep) {
  if (o.xd) {
    rep.add(xd_verma_check(o.range));
    return;
  }
  RootDatum rd = load_gcm(o.gcm);
  auto p = split(o.pair, ',');
  if (p.size() != 2) throw InputError("--pair takes two labels");
  int i = label_index(rd, p[0]), j = label_index(rd, p[1]);
  if (o.realization == "cc")
    rep.add(verma_identity_check(*ConstCommutator::make(rd, parse_commutators(o)), i, j, o.range));
  else if (o.realization == "qc")
    rep.add(verma_identity_check(*QCommutator::make(rd, parse_commutators(o)), i, j, o.range));
  else
    throw InputError("verma identities run in the cc or qc realization");
}

void cmd_verify_hirota(const Options& o, Report& rep) {
  if (o.n < 3) throw InputError("--n must be at least 3");
  if (o.sign != 1 && o.sign != -1) throw InputError("--sign is 1 or -1");
  HirotaContext ctx(static_cast<int>(o.n), static_cast<int>(o.sign));
  std::vector<long> ks;
  if (o.k) ks.push_back(o.k);
  else
    for (long k = 1; k <= o.n; ++k) ks.push_back(k);
  std::vector<IVec> ms;
  if (!o.m.empty()) {
    IVec m;
    for (auto& part : split(o.m, ',')) m.push_back(to_long(trim(part)));
    if (static_cast<long>(m.size()) != o.n) throw InputError("--m needs n entries");
    ms.push_back(m);
  } else {
    IVec m(o.n, 0);
    ms.push_back(m);
    m[0] = 1;
    ms.push_back(m);
    m[1] = 1;
    ms.push_back(m);
  }
  for (long k : ks) {
    rep.add(ctx.check_lemma(k));
    for (auto& m : ms) rep.add(ctx.check_translated(k, m));
  }
  if (o.translations) rep.add(ctx.check_translations());
}

void cmd_verify_reduced_word(const Options& o, Report& rep) {
  with_action(o, [&](auto& act) {
    const RootDatum& rd = act.datum();
    std::vector<IVec> weights = weights_or_default(rd, o.weights);
    if (o.words.size() == 2) {
      WeylWord a = parse_word(rd, o.words[0]), b = parse_word(rd, o.words[1]);
      for (auto& mu : weights) {
        auto c = act.reduced_word_independence(a, b, mu);
        c.name = word_labels(rd, a) + " vs " + word_labels(rd, b) + " mu=" + vec_str(mu);
        rep.add(c);
      }
      return;
    }
    if (!o.words.empty()) throw InputError("--words takes exactly two words");
    auto all = reduced_words(rd, static_cast<int>(o.length));
    CheckReport c{"reduced words up to length " + std::to_string(o.length), {}};
    std::vector<bool> done(all.size(), false);
    long groups = 0;
    for (std::size_t a = 0; a < all.size(); ++a) {
      if (done[a]) continue;
      ++groups;
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        if (done[b] || all[b].size() != all[a].size() || !same_weyl_element(rd, all[a], all[b])) continue;
        done[b] = true;
        for (auto& mu : weights) {
          auto ta = act.tau_function(all[a], mu), tb = act.tau_function(all[b], mu);
          c.add(word_labels(rd, all[a]) + " vs " + word_labels(rd, all[b]) + " mu=" + vec_str(mu), ta == tb,
                ta == tb ? "" : act.str(ta) + " != " + act.str(tb));
        }
      }
    }
    rep.artifacts()["elements"] = groups;
    rep.add(c);
  });
}

int degree_cap(const Options& o) {
  long cap = env_long("QTAU_MAX_DEGREE", o.maxdeg);
  if (cap < 0 || cap > 64) throw InputError("degree cap must lie in [0, 64]");
  return static_cast<int>(cap);
}

template <class F>
void verma_divide(const RootDatum& rd, const Options& o, Report& rep) {
  SerreQuotient<F> u(rd, degree_cap(o));
  WeylWord w = parse_word(rd, o.word);
  IVec lambda = parse_weight(rd, o.lambda), mu = parse_weight(rd, o.mu);
  Division<F> div;
  auto c = verma_instance_check(u, w, lambda, mu, &div);
  rep.artifacts()["F_w_lambda"] = word_str(rd, F_w_lambda(rd, w, lambda));
  rep.artifacts()["F_w_lambda_plus_mu"] = word_str(rd, F_w_lambda(rd, w, add(lambda, mu)));
  if (div.found) rep.artifacts()["P"] = u.str(div.quotient);
  rep.add(c);
}

void cmd_verma_divide(const Options& o, Report& rep) {
  RootDatum rd = load_gcm(o.gcm);
  if (o.vcase == "km") verma_divide<Rational>(rd, o, rep);
  else if (o.vcase == "q") verma_divide<RatFun>(rd, o, rep);
  else throw InputError("--case is q or km");
}

void cmd_verma_crosscheck(const Options& o, Report& rep) {
  RootDatum rd = load_gcm(o.gcm);
  WeylWord w = parse_word(rd, o.word);
  IVec lambda = parse_weight(rd, o.lambda), mu = parse_weight(rd, o.mu);
  int cap = degree_cap(o);
  if (o.vcase == "km") {
    WeylAction<ConstCommutator> act(ConstCommutator::make(rd));
    SerreQuotient<Rational> u(rd, cap);
    rep.add(sigma_phi_crosscheck(act, u, w, lambda, mu));
  } else if (o.vcase == "q") {
    WeylAction<QCommutator> act(QCommutator::make(rd));
    SerreQuotient<RatFun> u(rd, cap);
    rep.add(sigma_phi_crosscheck(act, u, w, lambda, mu));
  } else {
    throw InputError("--case is q or km");
  }
  if (o.qlimit) {
    SerreQuotient<RatFun> uq(rd, cap);
    SerreQuotient<Rational> uk(rd, cap);
    rep.add(q_limit_check(uq, uk, w, lambda, mu));
  }
}

void cmd_okamoto(const Options& o, Report& rep) {
  auto seq = okamoto_seq(o.mmax);
  Json polys = Json::array();
  CheckReport c{"okamoto", {}};
  for (auto& s : seq) {
    Json p;
    p["m"] = s.m;
    std::vector<std::string> coeffs;
    for (auto& x : s.q.coeffs()) coeffs.push_back(x.str());
    p["coefficients"] = coeffs;
    p["q"] = to_string(s.q, "x");
    polys.push_back(p);
    c.add("Q_" + std::to_string(s.m) + " exact", s.exact, s.exact ? "" : "nonzero remainder");
  }
  rep.artifacts()["Q"] = polys;
  rep.add(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum birational Weyl group action and tau-function checks"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;
  Json args = Json::array();

  auto gcm_opt = [&](CLI::App* c) { c->add_option("--gcm", o.gcm, "GCM JSON file"); };
  auto real_opt = [&](CLI::App* c) {
    c->add_option("--realization", o.realization, "cc, qc or weyl")->check(CLI::IsMember({"cc", "qc", "weyl"}));
    c->add_option("--type", o.type, "Weyl-algebra realization type");
    c->add_option("--commutators", o.commutators, "exponent matrix c_ij as JSON");
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "text or json")->check(CLI::IsMember({"text", "json"})); };
  auto verma_opts = [&](CLI::App* c) {
    gcm_opt(c);
    c->add_option("--word", o.word, "reduced word, labels separated by commas")->required();
    c->add_option("--lambda", o.lambda, "dominant weight")->required();
    c->add_option("--mu", o.mu, "dominant weight")->required();
    c->add_option("--maxdeg", o.maxdeg, "total degree cap (QTAU_MAX_DEGREE overrides)");
    c->add_option("--case", o.vcase, "q or km")->check(CLI::IsMember({"q", "km"}));
  };

  std::vector<std::pair<std::string, std::function<void(const Options&, Report&)>>> handlers;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help,
                 std::function<void(const Options&, Report&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    out_opt(c);
    c->callback([&chosen, full] { chosen = full; });
    handlers.push_back({full, std::move(fn)});
    return c;
  };

  CLI::App* gcm = app.add_subcommand("gcm", "Cartan matrix tools")->require_subcommand(1);
  gcm_opt(sub(gcm, "validate", "gcm validate", "validate a GCM and print its root datum", cmd_gcm_validate));

  CLI::App* tau = app.add_subcommand("tau", "tau-functions")->require_subcommand(1);
  {
    CLI::App* c = sub(tau, "compute", "tau compute", "tau-function along a reduced word", cmd_tau_compute);
    gcm_opt(c);
    real_opt(c);
    c->add_option("--word", o.word, "reduced word (omit to decompose a non-dominant weight)");
    c->add_option("--weight", o.weight, "dominant weight, or any weight without --word")->required();
  }
  {
    CLI::App* c = sub(tau, "check-regular", "tau check-regular", "regularity of tau-functions", cmd_tau_check_regular);
    gcm_opt(c);
    real_opt(c);
    c->add_option("--word", o.word, "single reduced word (default: all up to --length)");
    c->add_option("--weight", o.weight, "single dominant weight");
    c->add_option("--weights", o.weights, "dominant weights (default: fundamentals and rho)");
    c->add_option("--length", o.length, "maximal word length for the sweep");
  }

  CLI::App* verify = app.add_subcommand("verify", "identity checks")->require_subcommand(1);
  {
    CLI::App* c = sub(verify, "braid", "verify braid", "braid relations and s_i^2 = 1", cmd_verify_braid);
    gcm_opt(c);
    real_opt(c);
    c->add_option("--pair", o.pair, "two labels (default: all pairs)");
  }
  {
    CLI::App* c = sub(verify, "verma-identity", "verify verma-identity", "rank-2 Verma identities",
                      cmd_verify_verma_identity);
    gcm_opt(c);
    c->add_option("--realization", o.realization, "cc or qc")->check(CLI::IsMember({"cc", "qc"}));
    c->add_option("--commutators", o.commutators, "exponent matrix c_ij as JSON");
    c->add_option("--pair", o.pair, "two labels");
    c->add_option("--range", o.range, "integer specializations in [-range, range]");
    c->add_flag("--xd", o.xd, "the x/d identity in the Weyl algebra instead");
  }
  {
    CLI::App* c = sub(verify, "hirota", "verify hirota", "quantum q-Hirota-Miwa equation", cmd_verify_hirota);
    c->add_option("--n", o.n, "affine rank n of A_{n-1}^(1)");
    c->add_option("--k", o.k, "index k (default: all)");
    c->add_option("--m", o.m, "translation vector m_1,...,m_n (default: 0, e1, e1+e2)");
    c->add_option("--sign", o.sign, "commutator sign");
    c->add_flag("--translations", o.translations, "also check the translation relations");
  }
  {
    CLI::App* c = sub(verify, "reduced-word", "verify reduced-word", "reduced-word independence",
                      cmd_verify_reduced_word);
    gcm_opt(c);
    real_opt(c);
    c->add_option("--words", o.words, "two reduced words of the same element (default: sweep)");
    c->add_option("--weights", o.weights, "dominant weights (default: fundamentals and rho)");
    c->add_option("--length", o.length, "maximal word length for the sweep");
  }

  CLI::App* verma = app.add_subcommand("verma", "Verma module computations")->require_subcommand(1);
  verma_opts(sub(verma, "divide", "verma divide", "singularity and right division", cmd_verma_divide));
  {
    CLI::App* c = sub(verma, "crosscheck", "verma crosscheck", "sigma o phi against the Verma data",
                      cmd_verma_crosscheck);
    verma_opts(c);
    c->add_flag("--qlimit", o.qlimit, "also compare the q-case data at q = 1 with the KM case");
  }

  {
    CLI::App* c = sub(&app, "okamoto", "okamoto", "Okamoto polynomials", cmd_okamoto);
    c->add_option("--m", o.mmax, "largest index");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BadInput;
  }

  for (int k = 1; k < argc; ++k) args.push_back(argv[k]);
  Report rep(chosen, args);
  auto start = std::chrono::steady_clock::now();
  auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    for (auto& [name, fn] : handlers)
      if (name == chosen) fn(o, rep);
  } catch (const DegreeCapExceeded& e) {
    rep.skip("degree cap", e.what());
    return rep.finish(o.out, seconds());
  } catch (const UnsupportedLocalization& e) {
    rep.skip("localization", e.what());
    return rep.finish(o.out, seconds());
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return BadInput;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return Fail;
  }
  return rep.finish(o.out, seconds());
}
