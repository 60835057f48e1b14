#pragma once

#include "qtau/cartan.hpp"

namespace fixtures {

inline const qtau::IMat A1 = {{2}};
inline const qtau::IMat A1xA1 = {{2, 0}, {0, 2}};
inline const qtau::IMat A2 = {{2, -1}, {-1, 2}};
inline const qtau::IMat B2 = {{2, -1}, {-2, 2}};
inline const qtau::IMat G2 = {{2, -1}, {-3, 2}};
inline const qtau::IMat A3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
inline const qtau::IMat B3 = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
inline const qtau::IMat C3 = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
inline const qtau::IMat A1_1 = {{2, -2}, {-2, 2}};

inline qtau::RootDatum datum(const qtau::IMat& a) { return qtau::validate_gcm(a); }

inline qtau::IVec unit(int n, int k, long v = 1) {
  qtau::IVec e(n, 0);
  e[k] = v;
  return e;
}

}  // namespace fixtures
