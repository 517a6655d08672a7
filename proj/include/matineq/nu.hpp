#pragma once

#include <cmath>

#include "matineq/common.hpp"

namespace matineq {

// Constants derived from the Young weight nu.  r and big_r are the min/max
// of {nu, 1-nu}; r0 = min(2r, 1-2r) is the second-order refinement
// coefficient; k2 = floor(2 nu) and j4 = floor(4 nu) pick the branch of the
// closed-form refinement term.  Floors are taken of the exact double
// products, so lattice points behave exactly (nu = 1/4 gives j4 = 1,
// nu = 1/2 gives k2 = 1, j4 = 2).
struct NuContext {
  double nu = 0.0;
  double r = 0.0;
  double big_r = 0.0;
  double r0 = 0.0;
  int k2 = 0;
  int j4 = 0;

  static NuContext make(double nu) {
    require(nu > 0.0 && nu <= 1.0, "nu must lie in (0, 1]");
    return unchecked(nu);
  }

  // Accepts the closed interval [0, 1]; for the operations whose statement
  // includes the endpoints (Heinz means and the lemma-style bounds).
  static NuContext unchecked(double nu) {
    NuContext c;
    c.nu = nu;
    c.r = std::min(nu, 1.0 - nu);
    c.big_r = std::max(nu, 1.0 - nu);
    c.r0 = std::min(2.0 * c.r, 1.0 - 2.0 * c.r);
    c.k2 = static_cast<int>(std::floor(2.0 * nu));
    c.j4 = static_cast<int>(std::floor(4.0 * nu));
    return c;
  }
};

}  // namespace matineq
