#include "qtau/verma.hpp"

namespace qtau {

std::string word_str(const RootDatum& rd, const FWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = k;
    while (run < w.size() && w[run] == w[k]) ++run;
    if (!out.empty()) out += " ";
    out += power_str("f" + rd.labels[w[k]], static_cast<long>(run - k));
    k = run;
  }
  return out;
}

IVec verma_exponents(const RootDatum& rd, const WeylWord& w, const IVec& lambda) {
  check_word(rd, w);
  if (!is_reduced(rd, w).reduced) throw InputError("word is not reduced");
  if (!is_dominant(rd, lambda)) throw InputError("weight is not dominant");
  IVec out;
  WeylWord prefix;
  for (int j : w) {
    long n = rd.pair(rd.coroots[j], shifted_act(rd, prefix, lambda)) + 1;
    if (n < 0) throw InputError("negative exponent in F_{w,lambda}");
    out.push_back(n);
    prefix.push_back(j);
  }
  return out;
}

FWord F_w_lambda(const RootDatum& rd, const WeylWord& w, const IVec& lambda) {
  IVec n = verma_exponents(rd, w, lambda);
  FWord out;
  for (std::size_t k = w.size(); k-- > 0;) out.insert(out.end(), n[k], w[k]);
  return out;
}

Integer free_dimension(const IVec& degree) {
  Integer out = 1;
  long total = 0;
  for (long x : degree)
    for (long k = 1; k <= x; ++k) {
      ++total;
      out = out * total / k;
    }
  return out;
}

}  // namespace qtau
