#include "qtau/weylaction.hpp"

namespace qtau {

WeylElem xd_closed_sum(const WeylRealization& r, long a, long b) {
  WeylElem out = r.zero();
  for (long k = 0; k <= b; ++k) {
    Rational c = factorial(k) * binomial(a + b, k) * binomial(b, k);
    int e = static_cast<int>(a + b - k);
    out += r.term(RatX(XPoly::monomial(ParamKM(c), e), QPoly(1)), e);
  }
  return out;
}

CheckReport xd_verma_check(long range) {
  auto r = WeylRealization::make("A2");
  CheckReport rep{"x-d Verma identity", {}};
  for (long a = -range; a <= range; ++a)
    for (long b = -range; b <= range; ++b) {
      std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      try {
        WeylElem lhs = r->power(r->x(), a) * r->power(r->d(), a + b) * r->power(r->x(), b);
        WeylElem rhs = r->power(r->d(), b) * r->power(r->x(), a + b) * r->power(r->d(), a);
        bool ok = lhs == rhs;
        if (ok && a >= 0 && b >= 0) ok = lhs == xd_closed_sum(*r, a, b);
        rep.add(label, ok, ok ? r->str(lhs) : r->str(lhs) + " != " + r->str(rhs));
      } catch (const UnsupportedLocalization& e) {
        rep.unsupported(label, e.what());
      }
    }
  return rep;
}

}  // namespace qtau
