#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "matineq/common.hpp"

namespace matineq {

// Strictly increasing convex functions on a closed interval of nonnegative
// reals.  These are the phi's the sandwich results get instantiated with.
struct ConvexProbe {
  enum class Kind { PowerM, PowerHalfM, Exp };

  Kind kind = Kind::PowerM;
  int m = 1;  // exponent parameter, unused for Exp
  double domain_lo = 0.0;
  double domain_hi = std::numeric_limits<double>::infinity();

  static ConvexProbe power(int m) {
    require(m >= 1, "PowerM probe requires m >= 1");
    return ConvexProbe{Kind::PowerM, m, 0.0,
                       std::numeric_limits<double>::infinity()};
  }

  static ConvexProbe power_half(int m) {
    require(m >= 2, "PowerHalfM probe requires m >= 2");
    return ConvexProbe{Kind::PowerHalfM, m, 0.0,
                       std::numeric_limits<double>::infinity()};
  }

  // exp overflows past ~709; cap the domain instead of returning inf.
  static ConvexProbe exponential() {
    return ConvexProbe{Kind::Exp, 0, 0.0, 700.0};
  }

  bool contains(double x) const { return x >= domain_lo && x <= domain_hi; }

  double operator()(double x) const {
    switch (kind) {
      case Kind::PowerM:
        return int_pow(x, m);
      case Kind::PowerHalfM:
        return std::pow(x, 0.5 * m);
      case Kind::Exp:
        return std::exp(x);
    }
    return 0.0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::PowerM:
        return "x^" + std::to_string(m);
      case Kind::PowerHalfM:
        return "x^(" + std::to_string(m) + "/2)";
      case Kind::Exp:
        return "exp";
    }
    return "?";
  }
};

// Default probe registry for property suites.
inline const std::vector<ConvexProbe>& default_probes() {
  static const std::vector<ConvexProbe> probes = {
      ConvexProbe::power(1),      ConvexProbe::power(2),
      ConvexProbe::power(3),      ConvexProbe::power_half(2),
      ConvexProbe::power_half(3), ConvexProbe::power_half(4),
      ConvexProbe::exponential()};
  return probes;
}

}  // namespace matineq
