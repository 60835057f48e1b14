#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtau {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reorder or inverse that the concrete realization cannot express finitely.
struct UnsupportedLocalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A claimed identity or divisibility failed on a concrete instance.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational factorial(long k) {
  Rational out = 1;
  for (long j = 2; j <= k; ++j) out *= j;
  return out;
}

// Generalized binomial n(n-1)...(n-k+1)/k! for any integer n and k >= 0.
inline Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational out = 1;
  for (long j = 0; j < k; ++j) out = out * (n - j) / (j + 1);
  return out;
}

inline Rational pow_int(const Rational& base, long e) {
  Rational out = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (long j = 0; j < (e < 0 ? -e : e); ++j) out *= b;
  return out;
}

inline long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) s += a[k] * b[k];
  return s;
}

inline IVec add(IVec a, const IVec& b, long scale = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += scale * b[k];
  return a;
}

inline IVec scaled(IVec a, long s) {
  for (auto& x : a) x *= s;
  return a;
}

inline bool all_zero(const IVec& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

inline IVec trimmed(IVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace qtau
