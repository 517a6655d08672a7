#pragma once

#include <cmath>

#include "matineq/common.hpp"
#include "matineq/nu.hpp"
#include "matineq/probes.hpp"

namespace matineq {

// ---------------------------------------------------------------------------
// Second-order refinement term S1.
//
// Published closed form, branch-selected by j4 = floor(4 nu) and
// k2 = floor(2 nu):
//
//   S1(nu; a, b) = c(nu) * (qrt(b^{2-k2} a^{k2}) - qrt(a^{k2+1} b^{1-k2}))^2
//   c(nu)        = (-1)^{j4} 2 nu + (-1)^{j4+1} floor((j4 + 1) / 2)
//
// c(nu) equals min(2r, 1-2r) on every branch and vanishes at nu = 1/2 and
// nu = 1.  As typeset the radicand sits on the b side for nu < 1/2 and on
// the a side for nu >= 1/2, which is the orientation the *reverse*
// inequality needs; the refinement direction needs the mirror image (swap
// a and b).  s1 is the verbatim reading, s1_refinement the mirrored one;
// the audit subcommand exhibits counterexamples for the wrong pairings.
// ---------------------------------------------------------------------------

inline double s1_coefficient(double nu) {
  const int j4 = static_cast<int>(std::floor(4.0 * nu));
  const double sign = (j4 % 2 == 0) ? 1.0 : -1.0;
  return sign * (2.0 * nu - static_cast<double>((j4 + 1) / 2));
}

inline double s1(double nu, double a, double b) {
  require(a > 0.0 && b > 0.0, "s1: a and b must be positive");
  require(nu > 0.0 && nu <= 1.0, "s1: nu must lie in (0, 1]");
  const int k2 = static_cast<int>(std::floor(2.0 * nu));
  const double q1 = std::pow(b, 0.25 * (2 - k2)) * std::pow(a, 0.25 * k2);
  const double q2 = std::pow(a, 0.25 * (k2 + 1)) * std::pow(b, 0.25 * (1 - k2));
  const double diff = q1 - q2;
  return s1_coefficient(nu) * diff * diff;
}

inline double s1_refinement(double nu, double a, double b) {
  return s1(nu, b, a);
}

// S1 at squared arguments; the squared chains substitute a -> a^2, b -> b^2.
inline double s1_sq(double nu, double a, double b) { return s1(nu, a * a, b * b); }
inline double s1_refinement_sq(double nu, double a, double b) {
  return s1_refinement(nu, a * a, b * b);
}

struct Chain3 {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
};

struct BoundPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

// ---------------------------------------------------------------------------
// Refined Young chain:
//   a^{1-nu} b^nu + S1 + r (sqrt a - sqrt b)^2
//     <= (1-nu) a + nu b
//     <= a^{1-nu} b^nu + R (sqrt a - sqrt b)^2 - S1'
// Corrected uses the refinement-side S1 for the lower link; Printed uses the
// verbatim S1 on both links (fails the audit on the lower link).
// ---------------------------------------------------------------------------
inline Chain3 young_refined(double a, double b, double nu,
                            Variant v = Variant::Corrected) {
  require(a > 0.0 && b > 0.0, "young_refined: a and b must be positive");
  const NuContext c = NuContext::make(nu);
  const double y = std::pow(a, 1.0 - nu) * std::pow(b, nu);
  const double sd = std::sqrt(a) - std::sqrt(b);
  const double d = sd * sd;
  const double s_lo = (v == Variant::Corrected) ? s1_refinement(nu, a, b)
                                                : s1(nu, a, b);
  return Chain3{y + s_lo + c.r * d, (1.0 - nu) * a + nu * b,
                y + c.big_r * d - s1(nu, a, b)};
}

// Squared chain:
//   (a^{1-nu} b^nu)^2 + r^2 (a-b)^2 + S1@squares
//     <= ((1-nu) a + nu b)^2
//     <= (a^{1-nu} b^nu)^2 + R^2 (a-b)^2 - S1'@squares
// Printed keeps the typeset (1-nu)^2 coefficient and the plain-argument S1.
// ---------------------------------------------------------------------------
inline Chain3 young_squared(double a, double b, double nu,
                            Variant v = Variant::Corrected) {
  require(a > 0.0 && b > 0.0, "young_squared: a and b must be positive");
  require(nu > 0.0 && nu < 1.0, "young_squared: nu must lie in (0, 1)");
  const NuContext c = NuContext::make(nu);
  const double y = std::pow(a, 1.0 - nu) * std::pow(b, nu);
  const double x = (1.0 - nu) * a + nu * b;
  const double d2 = (a - b) * (a - b);
  if (v == Variant::Corrected) {
    return Chain3{y * y + c.r * c.r * d2 + s1_refinement_sq(nu, a, b), x * x,
                  y * y + c.big_r * c.big_r * d2 - s1_sq(nu, a, b)};
  }
  const double s = s1(nu, a, b);
  return Chain3{y * y + c.r * c.r * d2 + s, x * x,
                y * y + (1.0 - nu) * (1.0 - nu) * d2 - s};
}

// ---------------------------------------------------------------------------
// Bounds on the quadratic gap ((1-nu)a + nu b)^2 - (a^{1-nu} b^nu)^2.
// Printed evaluates the published bound lines verbatim (branch by nu vs 1/2);
// Corrected evaluates the expansion of the squared chain above
// (lower = r^2 (a-b)^2 + S1@sq, upper = R^2 (a-b)^2 - S1'@sq).  Both pass the
// audit; the Printed lower bound is exactly tight at nu = 1/4.
// ---------------------------------------------------------------------------
inline Chain3 quadratic_gap_bounds(double a, double b, double nu,
                                   Variant v = Variant::Printed) {
  require(a > 0.0 && b > 0.0, "quadratic_gap_bounds: a and b must be positive");
  require(nu > 0.0 && nu < 1.0, "quadratic_gap_bounds: nu must lie in (0, 1)");
  const NuContext c = NuContext::make(nu);
  const double y = std::pow(a, 1.0 - nu) * std::pow(b, nu);
  const double x = (1.0 - nu) * a + nu * b;
  const double gap = x * x - y * y;
  if (v == Variant::Corrected) {
    const double d2 = (a - b) * (a - b);
    return Chain3{c.r * c.r * d2 + s1_refinement_sq(nu, a, b), gap,
                  c.big_r * c.big_r * d2 - s1_sq(nu, a, b)};
  }
  const double sab = std::sqrt(a * b);
  const double nn = nu * nu;
  const double mm = (1.0 - nu) * (1.0 - nu);
  const double head_a = nn * (a * a + b * b) -
                        (2.0 * nn * a * b + 2.0 * c.r0 * a * sab -
                         c.r0 * (a * b + a * a));
  const double head_b2 = mm * (a * a + b * b) -
                         (2.0 * mm * a * b + 2.0 * c.r0 * b * sab -
                          c.r0 * (a * b + b * b));
  // upper line of the nu <= 1/2 branch carries a bare r0 b sqrt(ab) term
  const double head_b1 = mm * (a * a + b * b) -
                         (2.0 * mm * a * b + c.r0 * b * sab -
                          c.r0 * (a * b + b * b));
  if (nu <= 0.5) return Chain3{head_a, gap, head_b1};
  return Chain3{head_b2, gap, head_a};
}

inline double heinz_mean(double a, double b, double nu) {
  require(a > 0.0 && b > 0.0, "heinz_mean: a and b must be positive");
  require(nu >= 0.0 && nu <= 1.0, "heinz_mean: nu must lie in [0, 1]");
  return 0.5 * (std::pow(a, 1.0 - nu) * std::pow(b, nu) +
                std::pow(a, nu) * std::pow(b, 1.0 - nu));
}

// ---------------------------------------------------------------------------
// Sandwich point sets.  The convex-function sandwich compares
// phi(z) - phi(w) <= phi(x) - phi(y) <= phi(z_hi) - phi(w_hi) where the
// point roles satisfy w <= z <= x, y <= x <= z_hi, w_hi <= z_hi and
// z - w <= x - y <= z_hi - w_hi.
// ---------------------------------------------------------------------------
struct SandwichPoints {
  double w = 0.0, z = 0.0, x = 0.0, y = 0.0, z_hi = 0.0, w_hi = 0.0;
};

inline SandwichPoints young_sandwich_points(double a, double b, double nu) {
  require(a > 0.0 && b > 0.0, "sandwich points: a and b must be positive");
  require(nu > 0.0 && nu < 1.0, "sandwich points: nu must lie in (0, 1)");
  const NuContext c = NuContext::make(nu);
  const double sab = std::sqrt(a * b);
  const double qab = std::sqrt(sab);
  const double w_nu =
      2.0 * nu * sab + 2.0 * c.r0 * std::sqrt(a) * qab - c.r0 * (sab + a);
  const double z_nu = nu * (a + b);
  const double w_mnu = 2.0 * (1.0 - nu) * sab +
                       2.0 * c.r0 * qab * std::sqrt(b) - c.r0 * (sab + b);
  const double z_mnu = (1.0 - nu) * (a + b);
  SandwichPoints p;
  p.x = (1.0 - nu) * a + nu * b;
  p.y = std::pow(a, 1.0 - nu) * std::pow(b, nu);
  if (nu <= 0.5) {
    p.z = z_nu;
    p.w = w_nu;
    p.z_hi = z_mnu;
    p.w_hi = w_mnu;
  } else {
    p.z = z_mnu;
    p.w = w_mnu;
    p.z_hi = z_nu;
    p.w_hi = w_nu;
  }
  return p;
}

// Heinz variant: lower/upper heads r(a+b) and R(a+b) share one tail.
inline SandwichPoints heinz_sandwich_points(double a, double b, double nu) {
  require(a > 0.0 && b > 0.0, "sandwich points: a and b must be positive");
  require(nu >= 0.0 && nu <= 1.0, "heinz sandwich: nu must lie in [0, 1]");
  const NuContext c = NuContext::unchecked(nu);
  const double sab = std::sqrt(a * b);
  const double qab = std::sqrt(sab);
  const double sa = std::sqrt(a), sb = std::sqrt(b);
  const double tail =
      c.r0 * qab * (sa + sb) - 0.5 * c.r0 * (sa + sb) * (sa + sb);
  SandwichPoints p;
  p.w = 2.0 * c.r * sab + tail;
  p.z = c.r * (a + b);
  p.w_hi = 2.0 * c.big_r * sab + tail;
  p.z_hi = c.big_r * (a + b);
  p.x = 0.5 * (a + b);
  p.y = heinz_mean(a, b, nu);
  return p;
}

struct PhiChain {
  Chain3 chain;
  SandwichPoints points;
  double phi_mag = 0.0;  // largest |phi| operand, for tolerance scaling
};

inline PhiChain apply_probe(const ConvexProbe& probe, const SandwichPoints& p) {
  for (double v : {p.w, p.z, p.x, p.y, p.z_hi, p.w_hi}) {
    if (!probe.contains(v))
      throw DomainError("sandwich argument outside probe domain");
  }
  const double fw = probe(p.w), fz = probe(p.z), fx = probe(p.x),
               fy = probe(p.y), fzh = probe(p.z_hi), fwh = probe(p.w_hi);
  PhiChain out;
  out.chain = Chain3{fz - fw, fx - fy, fzh - fwh};
  out.points = p;
  out.phi_mag = std::max({std::abs(fw), std::abs(fz), std::abs(fx),
                          std::abs(fy), std::abs(fzh), std::abs(fwh)});
  return out;
}

inline PhiChain phi_sandwich(const ConvexProbe& probe, double a, double b,
                             double nu) {
  return apply_probe(probe, young_sandwich_points(a, b, nu));
}

inline PhiChain heinz_sandwich(const ConvexProbe& probe, double a, double b,
                               double nu) {
  return apply_probe(probe, heinz_sandwich_points(a, b, nu));
}

// ---------------------------------------------------------------------------
// (a^{1-nu}b^nu + a^nu b^{1-nu})^2 + 2r(a-b)^2
//   + r0 [(sqrt(ab)-a)^2 + (sqrt(ab)-b)^2]  <=  (a+b)^2,  a, b >= 0.
// pow(0, 0) = 1 and pow(0, t>0) = 0 reproduce the limit convention at the
// boundary; equality holds at a = b, at nu = 1/4, and at (1, 0, nu) for
// nu in [1/4, 1/2].
// ---------------------------------------------------------------------------
inline BoundPair lemma312_gap(double a, double b, double nu) {
  require(a >= 0.0 && b >= 0.0, "lemma312_gap: a and b must be nonnegative");
  require(nu >= 0.0 && nu <= 1.0, "lemma312_gap: nu must lie in [0, 1]");
  const NuContext c = NuContext::unchecked(nu);
  const double sab = std::sqrt(a * b);
  const double ysum = std::pow(a, 1.0 - nu) * std::pow(b, nu) +
                      std::pow(a, nu) * std::pow(b, 1.0 - nu);
  const double lhs = ysum * ysum + 2.0 * c.r * (a - b) * (a - b) +
                     c.r0 * ((sab - a) * (sab - a) + (sab - b) * (sab - b));
  return BoundPair{lhs, (a + b) * (a + b)};
}

// Refined Young chain at squared arguments, nu in (0, 1/2]:
//   (a^{1-nu} b^nu)^2 + r0 (sqrt(ab) - a)^2 + r (a-b)^2 <= (1-nu) a^2 + nu b^2.
// Corrected evaluates the lead term through the squared substitution
// (a^2)^{1-nu} (b^2)^nu; Printed squares a^{1-nu} b^nu directly.  The two are
// algebraically identical and both pass the audit.
// ---------------------------------------------------------------------------
inline BoundPair squared_young_refined(double a, double b, double nu,
                                       Variant v = Variant::Corrected) {
  require(a > 0.0 && b > 0.0,
          "squared_young_refined: a and b must be positive");
  require(nu > 0.0 && nu <= 0.5,
          "squared_young_refined: nu must lie in (0, 1/2]");
  const NuContext c = NuContext::make(nu);
  double y2;
  if (v == Variant::Corrected) {
    y2 = std::pow(a * a, 1.0 - nu) * std::pow(b * b, nu);
  } else {
    const double y = std::pow(a, 1.0 - nu) * std::pow(b, nu);
    y2 = y * y;
  }
  const double sab = std::sqrt(a * b);
  return BoundPair{y2 + c.r0 * (sab - a) * (sab - a) + c.r * (a - b) * (a - b),
                   (1.0 - nu) * a * a + nu * b * b};
}

}  // namespace matineq
