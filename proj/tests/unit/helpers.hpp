#pragma once

#include <vector>

#include "opuc/common.hpp"

namespace opuc::test {

// a point set that stays away from the symmetry axes
inline std::vector<cplx> ring_points(std::vector<double> radii, int angles) {
  std::vector<cplx> z;
  for (double r : radii)
    for (int k = 0; k < angles; ++k) z.push_back(r * unit(kTwoPi * (k + 0.3) / angles));
  return z;
}

// f_n for w = 1 + cos
inline cplx cos_iterate(int n, cplx z) { return (n % 2 ? -1.0 : 1.0) / ((n + 2.0) + (n + 1.0) * z); }

}  // namespace opuc::test
